// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Reference values are asserted at the tolerances fixed here; measured
// values are always printed so a failing line is directly actionable.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cbeam/analysis.hpp"
#include "cbeam/csv.hpp"
#include "cbeam/discretize.hpp"
#include "cbeam/eigenvalues.hpp"
#include "cbeam/stepper.hpp"
#include "cbeam/tridiagonal.hpp"
#include "test_oracles.hpp"

using namespace cbeam;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

int g_failures = 0;

void report(int id, bool ok, const std::string& label) {
    std::printf("%s  criterion %d: %s\n", ok ? "PASS" : "FAIL", id, label.c_str());
    if (!ok) ++g_failures;
}

void detail(const std::string& line) { std::printf("      %s\n", line.c_str()); }

bool within_rel(double measured, double reference, double rel) {
    return std::abs(measured - reference) <= rel * std::abs(reference);
}

double ladder_seconds(const BeamProblem& p, const std::vector<int>& ladder,
                      ConvergenceReport& rep) {
    const auto start = std::chrono::steady_clock::now();
    rep = convergence_table(p, ladder, 1.0);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

std::string row_text(const ConvergenceRow& r, double reference) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "Nx=%3d  error=%.6e  reference=%.6e  ratio=%.4f  order=%.4f",
                  r.nx, r.error, reference, r.error / reference, r.order);
    return buf;
}

void criterion_1() {
    const std::vector<double> reference = {6.634501648061786e-7, 4.1534138461862824e-8,
                                           2.597110193569563e-9, 1.6252299506192003e-10};
    ConvergenceReport rep;
    const double seconds = ladder_seconds(builtin_example(1), {32, 64, 128, 256}, rep);
    bool ok = seconds < 60.0;
    for (std::size_t k = 0; k < rep.rows.size(); ++k) {
        if (!within_rel(rep.rows[k].error, reference[k], 0.01)) ok = false;
        if (k > 0 && std::abs(rep.rows[k].order - 4.0) > 0.05) ok = false;
        detail(row_text(rep.rows[k], reference[k]));
    }
    detail("runtime " + std::to_string(seconds) + " s");
    report(1, ok,
           "example 1 ladder Nx=32..256, dt=h^2, t=1: errors within 1% of reference, "
           "orders 4.0+-0.05, under 60 s");
}

void criterion_2() {
    ConvergenceReport rep;
    ladder_seconds(builtin_example(2), {32, 64, 128, 256}, rep);
    bool ok = within_rel(rep.rows[0].error, 1.182547729e-7, 0.01);
    if (std::abs(rep.average_order - 3.99) > 0.05) ok = false;
    detail(row_text(rep.rows[0], 1.182547729e-7));
    char buf[64];
    std::snprintf(buf, sizeof buf, "average order = %.6f", rep.average_order);
    detail(buf);
    report(2, ok, "example 2 ladder: first error 1.1825e-7 +-1%, average order 3.99+-0.05");
}

void criterion_3() {
    ConvergenceReport rep;
    ladder_seconds(builtin_example(3), {32, 64, 128, 256}, rep);
    bool ok = within_rel(rep.rows[0].error, 2.849383778924519e-7, 0.01);
    detail(row_text(rep.rows[0], 2.849383778924519e-7));
    for (std::size_t k = 1; k < rep.rows.size(); ++k) {
        if (std::abs(rep.rows[k].order - 4.0) > 0.05) ok = false;
        char buf[64];
        std::snprintf(buf, sizeof buf, "order %zu -> %.6f", k, rep.rows[k].order);
        detail(buf);
    }
    report(3, ok, "example 3 ladder Nx=32..256: first error 2.8494e-7 +-1%, orders 4.00+-0.05");

    // the finest row is computed and reported only; it superconverges
    ConvergenceReport fine = convergence_table(builtin_example(3), {256, 512}, 1.0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "Nx=512 row (reported, not asserted): error=%.6e order=%.4f",
                  fine.rows[1].error, fine.rows[1].order);
    detail(buf);
}

void criterion_4() {
    MatrixXd Bcal(4, 4);
    Bcal << -3, -4, 3, -2,
             5,  0, 0,  2,
             4, -1, -1, 5,
            -2,  5, -4, -2;
    const MatrixXd A2 = build_A(2).to_dense();
    MatrixXd Acal = MatrixXd::Zero(4, 4);
    Acal.topLeftCorner(2, 2) = A2;
    Acal.bottomRightCorner(2, 2) = A2;

    auto sorted = [](Eigen::VectorXcd v) {
        std::vector<std::complex<double>> out(v.data(), v.data() + v.size());
        std::sort(out.begin(), out.end(), [](auto a, auto b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
        return out;
    };
    const auto eB = sorted(eigenvalues(Bcal).eigenvalues);
    const auto eAB = sorted(eigenvalues(Acal.partialPivLu().solve(Bcal)).eigenvalues);

    const std::vector<std::complex<double>> refB = {
        {-4.2503, 0.0}, {-1.3154, 0.0}, {-0.2172, -4.1164}, {-0.2172, 4.1164}};
    const std::vector<std::complex<double>> refAB = {
        {-6.4027, 0.0}, {-1.2627, 0.0}, {0.0751, -4.9855}, {0.0751, 4.9855}};

    bool ok = true;
    for (int i = 0; i < 4; ++i) {
        if (std::abs(eB[i].real() - refB[i].real()) > 5e-5
            || std::abs(eB[i].imag() - refB[i].imag()) > 5e-5)
            ok = false;
        if (std::abs(eAB[i].real() - refAB[i].real()) > 5e-5
            || std::abs(eAB[i].imag() - refAB[i].imag()) > 5e-5)
            ok = false;
    }
    const bool flagged = eAB[2].real() > 0.0 && eAB[3].real() > 0.0;
    if (!flagged) ok = false;
    for (int i = 0; i < 4; ++i) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "eig(B)=% .4f%+.4fi   eig(A^-1 B)=% .4f%+.4fi",
                      eB[i].real(), eB[i].imag(), eAB[i].real(), eAB[i].imag());
        detail(buf);
    }
    report(4, ok,
           "4x4 reference spectra match to 4 decimals; positive real part 0.0751 detected");
}

void criterion_5() {
    std::mt19937_64 rng(20250808);
    std::uniform_real_distribution<double> log_coeff(std::log(1e-3), std::log(100.0));
    std::uniform_real_distribution<double> log_dt(std::log(1e-4), std::log(1.0));
    std::uniform_int_distribution<int> nx_dist(4, 64);
    bool ok = true;
    double worst_rho = 0.0, worst_re = -1e300;
    for (int trial = 0; trial < 200; ++trial) {
        const double EI = std::exp(log_coeff(rng));
        const double rho = std::exp(log_coeff(rng));
        const double c = std::exp(log_coeff(rng));
        const double dt = std::exp(log_dt(rng));
        const int nx = nx_dist(rng);
        const BeamProblem p =
            make_problem(EI, rho, c, 1.0, dt, parse("0"), parse("0"), parse("0"), parse("0"),
                         parse("0"), parse("0"), parse("0"));
        const Grid g = make_grid(p, nx, 1);  // one step of exactly this dt
        const StabilityReport rep = stability_check(p, g);
        if (!rep.eig_converged) ok = false;
        worst_rho = std::max(worst_rho, rep.rho_Q);
        worst_re = std::max(worst_re, rep.max_re_system);
        if (rep.rho_Q > 1.0 + 1e-10 || rep.max_re_system > 1e-10) ok = false;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "worst rho(Q) - 1 = %.3e, worst max Re = %.3e",
                  worst_rho - 1.0, worst_re);
    detail(buf);
    report(5, ok,
           "200 random configurations (EI,rho,c in (0,100], Nx in [4,64], dt in [1e-4,1]): "
           "rho(Q) <= 1+1e-10 and max Re <= 1e-10");
}

void criterion_6() {
    const ConsistencyReport rep =
        consistency_order(builtin_example(1), {16, 32, 64, 128}, 256, {0.1, 0.05, 0.025});
    const bool ok = rep.spatial_order >= 3.7 && rep.spatial_order <= 4.5
                    && rep.temporal_order >= 1.8 && rep.temporal_order <= 2.2;
    char buf[96];
    std::snprintf(buf, sizeof buf, "spatial order = %.4f, temporal order = %.4f",
                  rep.spatial_order, rep.temporal_order);
    detail(buf);
    report(6, ok, "truncation-residual orders: spatial in [3.7,4.5] with dt=h^2, temporal in "
                  "[1.8,2.2] at fixed fine h");
}

void criterion_7() {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> size(2, 64);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = size(rng);
        VectorXd lo, di, up;
        oracle::random_dd_tridiag(rng, n, lo, di, up);
        const auto M = TridiagMatrix::general(lo, di, up);
        VectorXd rhs(n);
        for (Eigen::Index i = 0; i < n; ++i) rhs(i) = entry(rng);
        const VectorXd ref = oracle::dense_ge_solve(M.to_dense(), rhs);
        const double scale = std::max(1.0, ref.cwiseAbs().maxCoeff());

        const double d_thomas = (tridiag_solve(M, rhs) - ref).cwiseAbs().maxCoeff() / scale;
        BandedMatrix band(n, 1, 1);
        for (Eigen::Index i = 0; i < n; ++i) {
            band.at(i, i) = di(i);
            if (i + 1 < n) {
                band.at(i + 1, i) = lo(i);
                band.at(i, i + 1) = up(i);
            }
        }
        const double d_band =
            (banded_factor(band).solve(rhs) - ref).cwiseAbs().maxCoeff() / scale;
        worst = std::max({worst, d_thomas, d_band});
        if (d_thomas > 1e-12 || d_band > 1e-12) ok = false;
    }

    // one Crank-Nicolson step against the dense stacked implementation
    const BeamProblem p = builtin_example(1);
    const Grid g = make_grid(p, 8, 64);
    const StateVector U0 = initial_state(p, g);
    const StateVector U1 = CnStepper(p, g).step(U0, 0.0);
    const Eigen::Index n = g.nx - 1;
    const MatrixXd L = dense_acal(p, g) - 0.5 * g.dt * dense_bcal(p, g);
    const MatrixXd R = dense_acal(p, g) + 0.5 * g.dt * dense_bcal(p, g);
    VectorXd u0(2 * n);
    u0 << U0.phi, U0.psi;
    const VectorXd rhs =
        R * u0 + 0.5 * g.dt * (boundary_force(p, g, 0.0) + boundary_force(p, g, g.dt));
    const VectorXd u1 = oracle::dense_ge_solve(L, rhs);
    VectorXd mine(2 * n);
    mine << U1.phi, U1.psi;
    const double d_step = (mine - u1).cwiseAbs().maxCoeff();
    if (d_step > 1e-11) ok = false;

    char buf[96];
    std::snprintf(buf, sizeof buf, "worst solver deviation = %.3e, CN-step deviation = %.3e",
                  worst, d_step);
    detail(buf);
    report(7, ok, "tridiagonal/banded solvers match dense elimination to 1e-12 on 200 systems; "
                  "one CN step matches the dense form to 1e-11");
}

void criterion_8() {
    std::mt19937_64 rng(3141592);
    std::uniform_int_distribution<int> size(1, 64);
    std::uniform_real_distribution<double> entry(-5.0, 5.0);
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = size(rng);
        const double a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
        if (!commutes(TridiagMatrix::toeplitz(n, b, a, b), TridiagMatrix::toeplitz(n, d, c, d)))
            ok = false;
    }
    report(8, ok, "symmetric Toeplitz tridiagonal pairs commute across 100 random draws");
}

void criterion_9() {
    std::mt19937_64 rng(271828);
    std::uniform_real_distribution<double> pt(0.0, 1.0);
    bool ok = true;
    double worst = 0.0;
    for (int id = 1; id <= 3; ++id) {
        const BeamProblem p = builtin_example(id);
        const Expr u4 = diff(diff(diff(diff(*p.u_exact, Var::x), Var::x), Var::x), Var::x);
        const Expr utt = diff(diff(*p.u_exact, Var::t), Var::t);
        const Expr ut = diff(*p.u_exact, Var::t);
        for (int k = 0; k < 100; ++k) {
            const double x = pt(rng), t = pt(rng);
            const double r = p.EI * eval(u4, x, t) + p.rho * eval(utt, x, t)
                             + p.c * eval(ut, x, t) - eval(p.f, x, t);
            worst = std::max(worst, std::abs(r));
            if (std::abs(r) > 1e-9) ok = false;
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst residual = %.3e", worst);
    detail(buf);
    report(9, ok, "manufactured-forcing residual <= 1e-9 at 100 random points per example");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
    else std::printf("all criteria passed\n");
    return g_failures == 0 ? 0 : 1;
}
