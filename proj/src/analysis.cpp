#include "cbeam/analysis.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>

#include "cbeam/discretize.hpp"
#include "cbeam/stepper.hpp"

namespace cbeam {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

int worker_count(std::size_t jobs) {
    if (const char* env = std::getenv("CBEAM_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return static_cast<int>(std::min<std::size_t>(n, jobs));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min<std::size_t>(hw ? hw : 1, jobs));
}

// exact (Phi*, Psi*) samples, stacked ordering
VectorXd exact_state(const BeamProblem& p, const Grid& g, const Expr& phi_e, const Expr& psi_e,
                     double t) {
    const Index n = g.nx - 1;
    VectorXd s(2 * n);
    for (Index i = 1; i <= n; ++i) {
        s(i - 1) = eval(phi_e, i * g.h, t);
        s(n + i - 1) = eval(psi_e, i * g.h, t);
    }
    return s;
}

ConsistencySample truncation_residual(const BeamProblem& p, const Grid& g, const Expr& phi_e,
                                      const Expr& psi_e) {
    const BlockOperators ops = assemble_block(p, g);
    const long n_mid = g.nt / 2;  // sample the step nearest T/2
    const double t0 = n_mid * g.dt, t1 = (n_mid + 1) * g.dt;
    const VectorXd U0 = interleave(exact_state(p, g, phi_e, psi_e, t0));
    const VectorXd U1 = interleave(exact_state(p, g, phi_e, psi_e, t1));
    const VectorXd F = interleave(boundary_force(p, g, t0) + boundary_force(p, g, t1));
    const VectorXd residual =
        ops.Acal.apply((U1 - U0) / g.dt) - ops.Bcal.apply(0.5 * (U1 + U0)) - 0.5 * F;
    return ConsistencySample{g.nx, g.h, g.dt, residual.cwiseAbs().maxCoeff()};
}

}  // namespace

StabilityReport stability_check(const BeamProblem& p, const Grid& g) {
    StabilityReport rep;
    rep.nx = g.nx;
    rep.dt = g.dt;
    rep.EI = p.EI;
    rep.rho = p.rho;
    rep.c = p.c;

    const MatrixXd Acal = dense_acal(p, g);
    const MatrixXd Bcal = dense_bcal(p, g);
    const MatrixXd M = Acal.partialPivLu().solve(Bcal);

    const Spectrum sM = eigenvalues(M);
    rep.max_re_system = -std::numeric_limits<double>::infinity();
    for (Index i = 0; i < sM.eigenvalues.size(); ++i)
        rep.max_re_system = std::max(rep.max_re_system, sM.eigenvalues(i).real());

    const Index dim = M.rows();
    const MatrixXd Q1 = MatrixXd::Identity(dim, dim) - 0.5 * g.dt * M;
    const MatrixXd Q2 = MatrixXd::Identity(dim, dim) + 0.5 * g.dt * M;
    const MatrixXd Q = Q1.partialPivLu().solve(Q2);
    const Spectrum sQ = eigenvalues(Q);
    rep.rho_Q = spectral_radius(sQ);

    rep.eig_converged = sM.converged && sQ.converged;
    rep.pass = rep.rho_Q <= 1.0 + 1e-10;
    return rep;
}

ConvergenceReport convergence_table(const BeamProblem& p, const std::vector<int>& ladder,
                                    double t_eval, DtRule rule) {
    if (!p.u_exact)
        throw std::invalid_argument("convergence_table: the problem has no exact solution");
    if (ladder.empty()) throw std::invalid_argument("convergence_table: empty ladder");
    if (!(t_eval > 0.0)) throw std::invalid_argument("convergence_table: t_eval must be positive");

    BeamProblem q = p;
    q.T = t_eval;

    ConvergenceReport rep;
    rep.t_eval = t_eval;
    rep.rows.resize(ladder.size());

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= ladder.size()) return;
            const int nx = ladder[k];
            const long nt = rule.h_squared ? steps_for_h2(q, nx) : steps_for_dt(q, rule.dt);
            const Grid g = make_grid(q, nx, nt);
            const VectorXd u = solve(q, g).final_displacement();
            double err = 0.0;
            for (Index i = 0; i <= g.nx; ++i)
                err = std::max(err, std::abs(u(i) - eval(*q.u_exact, i * g.h, t_eval)));
            rep.rows[k] = ConvergenceRow{nx, g.h, g.dt, err,
                                         std::numeric_limits<double>::quiet_NaN()};
        }
    };
    const int workers = worker_count(ladder.size());
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    double sum = 0.0;
    int count = 0;
    for (std::size_t k = 1; k < rep.rows.size(); ++k) {
        const auto& prev = rep.rows[k - 1];
        auto& cur = rep.rows[k];
        cur.order = std::log(prev.error / cur.error) / std::log(prev.h / cur.h);
        sum += cur.order;
        ++count;
    }
    rep.average_order = count ? sum / count : std::numeric_limits<double>::quiet_NaN();
    return rep;
}

ConsistencyReport consistency_order(const BeamProblem& p, const std::vector<int>& space_ladder,
                                    int time_nx, const std::vector<double>& time_dts) {
    if (!p.u_exact)
        throw std::invalid_argument("consistency_order: the problem has no exact solution");
    if (space_ladder.empty()) throw std::invalid_argument("consistency_order: empty ladder");

    const Expr phi_e = diff(*p.u_exact, Var::t);
    const Expr psi_e = diff(diff(*p.u_exact, Var::x), Var::x);

    ConsistencyReport rep;
    std::vector<double> hs, rs;
    for (const int nx : space_ladder) {
        const Grid g = make_grid(p, nx, steps_for_h2(p, nx));
        rep.space.push_back(truncation_residual(p, g, phi_e, psi_e));
        hs.push_back(g.h);
        rs.push_back(rep.space.back().residual);
    }
    rep.spatial_order = fit_slope(hs, rs);

    std::vector<double> dts, rt;
    for (const double dt : time_dts) {
        const Grid g = make_grid(p, time_nx, steps_for_dt(p, dt));
        rep.time.push_back(truncation_residual(p, g, phi_e, psi_e));
        dts.push_back(g.dt);
        rt.push_back(rep.time.back().residual);
    }
    rep.temporal_order = fit_slope(dts, rt);
    return rep;
}

}  // namespace cbeam
