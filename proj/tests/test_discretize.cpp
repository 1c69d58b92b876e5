#include "cbeam/discretize.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <doctest.h>

#include "cbeam/eigenvalues.hpp"
#include "test_oracles.hpp"

using namespace cbeam;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {
constexpr double kPi = 3.14159265358979323846;

// stacked -> interleaved permutation as a dense matrix, for comparing the
// banded realization against the dense block construction
MatrixXd interleave_permutation(Index n) {
    MatrixXd P = MatrixXd::Zero(2 * n, 2 * n);
    for (Index i = 0; i < n; ++i) {
        P(2 * i, i) = 1.0;
        P(2 * i + 1, n + i) = 1.0;
    }
    return P;
}
}  // namespace

TEST_CASE("build_A lays down the compact weights") {
    const auto A3 = build_A(3).to_dense();
    MatrixXd expected(3, 3);
    expected << 5.0 / 6, 1.0 / 12, 0.0,
                1.0 / 12, 5.0 / 6, 1.0 / 12,
                0.0, 1.0 / 12, 5.0 / 6;
    CHECK((A3 - expected).cwiseAbs().maxCoeff() == 0.0);

    const auto A1 = build_A(1);
    CHECK(A1.size() == 1);
    CHECK(A1.diag(0) == 5.0 / 6);

    // interior row sums are exactly one
    const auto A9 = build_A(9).to_dense();
    for (Index i = 1; i < 8; ++i) CHECK(A9.row(i).sum() == 1.0);
}

TEST_CASE("build_B is the scaled second difference") {
    const auto B3 = build_B(3, 1.0).to_dense();
    MatrixXd expected(3, 3);
    expected << 2, -1, 0, -1, 2, -1, 0, -1, 2;
    CHECK((B3 - expected).cwiseAbs().maxCoeff() == 0.0);
    CHECK((build_B(3, 0.5).to_dense() - 4.0 * expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("compact relation is fourth order where the plain difference is second") {
    std::vector<double> hs, r_plain, r_compact;
    for (const int nx : {16, 32, 64}) {
        const double h = 1.0 / nx;
        const Index n = nx - 1;
        VectorXd u(n), uxx(n);
        for (Index i = 1; i <= n; ++i) {
            u(i - 1) = std::sin(kPi * i * h);
            uxx(i - 1) = -kPi * kPi * std::sin(kPi * i * h);
        }
        const auto B = build_B(n, h);
        const auto A = build_A(n);
        // sin(pi x) vanishes at both ends, so no boundary folding is needed
        const double plain = (-B.apply(u) - uxx).cwiseAbs().maxCoeff();
        const double compact = (A.apply(uxx) + B.apply(u)).cwiseAbs().maxCoeff();
        hs.push_back(h);
        r_plain.push_back(plain);
        r_compact.push_back(compact);
    }
    CHECK(oracle::slope_fit(hs, r_plain) == doctest::Approx(2.0).epsilon(0.05));
    CHECK(oracle::slope_fit(hs, r_compact) == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("block operators match the dense construction") {
    const BeamProblem p = make_manufactured_problem(parse("sin(pi*x)*cos(pi*t)"), 1.0, 1.0, 1.0);
    const Grid g = make_grid(p, 4, 16);
    const Index n = 3;

    // hand-built dense blocks
    const MatrixXd A = build_A(n).to_dense();
    const MatrixXd B = build_B(n, g.h).to_dense();
    MatrixXd Acal = MatrixXd::Zero(6, 6), Bcal = MatrixXd::Zero(6, 6);
    Acal.topLeftCorner(3, 3) = p.rho * A;
    Acal.bottomRightCorner(3, 3) = A;
    Bcal.topLeftCorner(3, 3) = -p.c * A;
    Bcal.topRightCorner(3, 3) = p.EI * B;
    Bcal.bottomLeftCorner(3, 3) = -B;

    CHECK((dense_acal(p, g) - Acal).cwiseAbs().maxCoeff() == 0.0);
    CHECK((dense_bcal(p, g) - Bcal).cwiseAbs().maxCoeff() == 0.0);

    const BlockOperators ops = assemble_block(p, g);
    const MatrixXd P = interleave_permutation(n);
    CHECK((ops.Acal.to_dense() - P * Acal * P.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((ops.Bcal.to_dense() - P * Bcal * P.transpose()).cwiseAbs().maxCoeff() == 0.0);

    // rho = 1 makes the Acal block diagonal a plain pair of A blocks
    MatrixXd AA = MatrixXd::Zero(6, 6);
    AA.topLeftCorner(3, 3) = A;
    AA.bottomRightCorner(3, 3) = A;
    CHECK((dense_acal(p, g) - AA).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("banded and dense block operators agree on a larger grid") {
    const BeamProblem p = builtin_example(1);
    const Grid g = make_grid(p, 10, 100);
    const Index n = g.nx - 1;
    const BlockOperators ops = assemble_block(p, g);
    const MatrixXd P = interleave_permutation(n);
    CHECK((ops.Acal.to_dense() - P * dense_acal(p, g) * P.transpose()).cwiseAbs().maxCoeff()
          == 0.0);
    CHECK((ops.Bcal.to_dense() - P * dense_bcal(p, g) * P.transpose()).cwiseAbs().maxCoeff()
          == 0.0);
}

TEST_CASE("system spectrum sits in the left half plane") {
    const BeamProblem p = builtin_example(1);
    const Grid g = make_grid(p, 8, 64);
    const MatrixXd Acal = dense_acal(p, g), Bcal = dense_bcal(p, g);
    MatrixXd AinvB(Acal.rows(), Acal.cols());
    for (Index j = 0; j < Acal.cols(); ++j)
        AinvB.col(j) = oracle::dense_ge_solve(Acal, Bcal.col(j));
    const Spectrum s = eigenvalues(AinvB);
    REQUIRE(s.converged);
    for (Index i = 0; i < s.eigenvalues.size(); ++i)
        CHECK(s.eigenvalues(i).real() <= 1e-10);
}

TEST_CASE("compact weight matrix has positive spectrum and commutes with B") {
    for (const Index n : {2, 5, 16, 64}) {
        const auto A = build_A(n);
        const Spectrum s = eigenvalues(A.to_dense());
        REQUIRE(s.converged);
        for (Index i = 0; i < n; ++i) {
            CHECK(s.eigenvalues(i).real() > 0.0);
            CHECK(std::abs(s.eigenvalues(i).imag()) <= 1e-12);
        }
        for (const double h : {1.0, 0.25, 0.01})
            CHECK(commutes(A, build_B(n, h)));
    }
}

TEST_CASE("boundary force: homogeneous data leaves only the weighted forcing") {
    const BeamProblem p = builtin_example(1);  // all boundary traces identically zero
    const Grid g = make_grid(p, 8, 64);
    const Index n = g.nx - 1;
    // the symbolic traces at x = L carry the rounding of sin(pi), so "zero"
    // here means zero at the scale of that rounding, not bitwise
    for (const double t : {0.0, 0.37, 1.0}) {
        const VectorXd F = boundary_force(p, g, t);
        CHECK(F.tail(n).cwiseAbs().maxCoeff() <= 1e-12);
        for (Index i = 1; i <= n; ++i) {
            const double expected = eval(p.f, (i - 1) * g.h, t) / 12
                                    + (5.0 / 6) * eval(p.f, i * g.h, t)
                                    + eval(p.f, (i + 1) * g.h, t) / 12;
            CHECK(F(i - 1) == doctest::Approx(expected).epsilon(1e-11));
        }
    }
}

TEST_CASE("boundary force: hand evaluation of the corner entries") {
    // second builtin: u = sinh(t) cos(pi x), EI = rho = c = 1, so
    //   mu0 = sinh(t), mu2 = -pi^2 sinh(t)
    const BeamProblem p = builtin_example(2);
    const Grid g = make_grid(p, 4, 16);
    const Index n = g.nx - 1;
    const double t = 0.3, h2 = g.h * g.h;
    const VectorXd F = boundary_force(p, g, t);

    const double alpha = kPi * kPi * std::sinh(t) / h2  // -EI*mu2/h^2
                         - std::sinh(t) / 12            // -rho*mu0''/12
                         - std::cosh(t) / 12;           // -c*mu0'/12
    const double dtilde_f1 = eval(p.f, 0.0, t) / 12 + (5.0 / 6) * eval(p.f, g.h, t)
                             + eval(p.f, 2 * g.h, t) / 12;
    CHECK(F(0) - dtilde_f1 == doctest::Approx(alpha).epsilon(1e-12));

    const double alphap = std::cosh(t) / h2 + kPi * kPi * std::cosh(t) / 12;
    CHECK(F(n) == doctest::Approx(alphap).epsilon(1e-12));
}

TEST_CASE("boundary force is linear in the data") {
    const Expr u = parse("sinh(t)*cos(pi*x)");
    const Expr u2 = parse("2*(sinh(t)*cos(pi*x))");
    const BeamProblem p1 = make_manufactured_problem(u, 1.0, 1.0, 1.0);
    const BeamProblem p2 = make_manufactured_problem(u2, 1.0, 1.0, 1.0);
    const Grid g = make_grid(p1, 8, 64);
    for (const double t : {0.0, 0.41, 0.9}) {
        const VectorXd F1 = boundary_force(p1, g, t);
        const VectorXd F2 = boundary_force(p2, g, t);
        CHECK((F2 - 2.0 * F1).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("initial state") {
    SUBCASE("zero initial displacement gives zero moment") {
        const BeamProblem p = builtin_example(2);  // xi1 = 0, mu2(0) = mu3(0) = 0
        const Grid g = make_grid(p, 16, 16);
        const StateVector s = initial_state(p, g);
        CHECK(s.psi.cwiseAbs().maxCoeff() == 0.0);
        for (Index i = 1; i < g.nx; ++i)
            CHECK(s.phi(i - 1) == doctest::Approx(std::cos(kPi * i * g.h)).epsilon(1e-15));
        CHECK(s.time_index == 0);
    }
    SUBCASE("compact moment solve is fourth order") {
        std::vector<double> hs, errs;
        for (const int nx : {16, 32, 64}) {
            const BeamProblem p = builtin_example(1);
            const Grid g = make_grid(p, nx, 16);
            const StateVector s = initial_state(p, g);
            double err = 0.0;
            for (Index i = 1; i < g.nx; ++i)
                err = std::max(err,
                               std::abs(s.psi(i - 1) + kPi * kPi * std::sin(kPi * i * g.h)));
            hs.push_back(g.h);
            errs.push_back(err);
        }
        CHECK(oracle::slope_fit(hs, errs) == doctest::Approx(4.0).epsilon(0.05));
    }
}

TEST_CASE("interleave round trip") {
    std::mt19937_64 rng(211);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    VectorXd v(14);
    for (Index i = 0; i < v.size(); ++i) v(i) = entry(rng);
    CHECK((deinterleave(interleave(v)) - v).cwiseAbs().maxCoeff() == 0.0);
    const VectorXd w = interleave(v);
    CHECK(w(0) == v(0));
    CHECK(w(1) == v(7));
}

TEST_CASE("problem validation") {
    CHECK_THROWS_AS(builtin_example(0), std::invalid_argument);
    CHECK_THROWS_AS(make_manufactured_problem(parse("sin(pi*x)"), -1.0, 1.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_grid(builtin_example(1), 2, 10), std::invalid_argument);
    // corner incompatibility: xi1(0) = 1 but mu0(0) = 0
    CHECK_THROWS_AS(make_problem(1.0, 1.0, 1.0, 1.0, 1.0, parse("1"), parse("0"), parse("0"),
                                 parse("0"), parse("0"), parse("0"), parse("0")),
                    std::invalid_argument);
}
