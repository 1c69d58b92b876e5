#include "cbeam/discretize.hpp"

#include <stdexcept>
#include <vector>

namespace cbeam {

TridiagMatrix build_A(Index n) {
    return TridiagMatrix::toeplitz(n, 1.0 / 12, 5.0 / 6, 1.0 / 12);
}

TridiagMatrix build_B(Index n, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("build_B: h must be positive");
    const double s = 1.0 / (h * h);
    return TridiagMatrix::toeplitz(n, -s, 2.0 * s, -s);
}

BlockOperators assemble_block(const BeamProblem& p, const Grid& g) {
    const Index n = g.nx - 1;
    const double s = 1.0 / (g.h * g.h);
    BandedMatrix Acal(2 * n, 2, 2);
    BandedMatrix Bcal(2 * n, 3, 3);
    for (Index i = 0; i < n; ++i) {
        const Index rp = 2 * i;      // phi equation at node i+1
        const Index rq = 2 * i + 1;  // psi equation at node i+1
        // Acal: rho*A on the phi block, A on the psi block
        Acal.at(rp, rp) = p.rho * (5.0 / 6);
        Acal.at(rq, rq) = 5.0 / 6;
        if (i > 0) {
            Acal.at(rp, rp - 2) = p.rho * (1.0 / 12);
            Acal.at(rq, rq - 2) = 1.0 / 12;
        }
        if (i + 1 < n) {
            Acal.at(rp, rp + 2) = p.rho * (1.0 / 12);
            Acal.at(rq, rq + 2) = 1.0 / 12;
        }
        // Bcal phi rows: -c*A on Phi, EI*B on Psi
        Bcal.at(rp, rp) = -p.c * (5.0 / 6);
        Bcal.at(rp, rp + 1) = p.EI * (2.0 * s);
        if (i > 0) {
            Bcal.at(rp, rp - 2) = -p.c * (1.0 / 12);
            Bcal.at(rp, rp - 1) = p.EI * -s;
        }
        if (i + 1 < n) {
            Bcal.at(rp, rp + 2) = -p.c * (1.0 / 12);
            Bcal.at(rp, rp + 3) = p.EI * -s;
        }
        // Bcal psi rows: -B on Phi
        Bcal.at(rq, rq - 1) = -2.0 * s;
        if (i > 0) Bcal.at(rq, rq - 3) = s;
        if (i + 1 < n) Bcal.at(rq, rq + 1) = s;
    }
    return BlockOperators{std::move(Acal), std::move(Bcal)};
}

Eigen::MatrixXd dense_acal(const BeamProblem& p, const Grid& g) {
    const Index n = g.nx - 1;
    const Eigen::MatrixXd A = build_A(n).to_dense();
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    M.topLeftCorner(n, n) = p.rho * A;
    M.bottomRightCorner(n, n) = A;
    return M;
}

Eigen::MatrixXd dense_bcal(const BeamProblem& p, const Grid& g) {
    const Index n = g.nx - 1;
    const Eigen::MatrixXd A = build_A(n).to_dense();
    const Eigen::MatrixXd B = build_B(n, g.h).to_dense();
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    M.topLeftCorner(n, n) = -p.c * A;
    M.topRightCorner(n, n) = p.EI * B;
    M.bottomLeftCorner(n, n) = -B;
    return M;
}

Eigen::VectorXd boundary_force(const BeamProblem& p, const Grid& g, double t) {
    const Index n = g.nx - 1;
    const double h2 = g.h * g.h;
    Eigen::VectorXd F = Eigen::VectorXd::Zero(2 * n);

    std::vector<double> fs(g.nx + 1);
    for (int i = 0; i <= g.nx; ++i) fs[i] = eval(p.f, i * g.h, t);
    for (Index i = 1; i <= n; ++i)
        F(i - 1) = fs[i - 1] / 12 + (5.0 / 6) * fs[i] + fs[i + 1] / 12;

    const double phi0 = eval(p.mu0_t, 0.0, t), dphi0 = eval(p.mu0_tt, 0.0, t);
    const double phiN = eval(p.mu1_t, 0.0, t), dphiN = eval(p.mu1_tt, 0.0, t);
    const double psi0 = eval(p.mu2, 0.0, t), dpsi0 = eval(p.mu2_t, 0.0, t);
    const double psiN = eval(p.mu3, 0.0, t), dpsiN = eval(p.mu3_t, 0.0, t);

    F(0) += -p.EI * psi0 / h2 - p.rho * dphi0 / 12 - p.c * phi0 / 12;       // alpha
    F(n - 1) += -p.EI * psiN / h2 - p.rho * dphiN / 12 - p.c * phiN / 12;   // beta
    F(n) = phi0 / h2 - dpsi0 / 12;                                          // alpha'
    F(2 * n - 1) += phiN / h2 - dpsiN / 12;                                 // beta'
    return F;
}

StateVector initial_state(const BeamProblem& p, const Grid& g) {
    const Index n = g.nx - 1;
    StateVector s;
    s.phi.resize(n);
    for (Index i = 1; i <= n; ++i) s.phi(i - 1) = eval(p.xi2, i * g.h, 0.0);

    Eigen::VectorXd rhs(n);
    const double h2 = g.h * g.h;
    auto xi1 = [&](Index i) { return eval(p.xi1, i * g.h, 0.0); };
    for (Index i = 1; i <= n; ++i) rhs(i - 1) = (xi1(i + 1) - 2.0 * xi1(i) + xi1(i - 1)) / h2;
    rhs(0) -= eval(p.mu2, 0.0, 0.0) / 12;
    rhs(n - 1) -= eval(p.mu3, 0.0, 0.0) / 12;
    s.psi = tridiag_solve(build_A(n), rhs);
    s.time_index = 0;
    return s;
}

Eigen::VectorXd interleave(const Eigen::Ref<const Eigen::VectorXd>& stacked) {
    const Index n = stacked.size() / 2;
    Eigen::VectorXd out(2 * n);
    for (Index i = 0; i < n; ++i) {
        out(2 * i) = stacked(i);
        out(2 * i + 1) = stacked(n + i);
    }
    return out;
}

Eigen::VectorXd deinterleave(const Eigen::Ref<const Eigen::VectorXd>& interleaved) {
    const Index n = interleaved.size() / 2;
    Eigen::VectorXd out(2 * n);
    for (Index i = 0; i < n; ++i) {
        out(i) = interleaved(2 * i);
        out(n + i) = interleaved(2 * i + 1);
    }
    return out;
}

}  // namespace cbeam
