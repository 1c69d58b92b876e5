#include "cbeam/stepper.hpp"

namespace cbeam {

namespace {

BandedMatrix combine(const BlockOperators& ops, double dt, double sign) {
    // Acal + sign * (dt/2) * Bcal, widened to the Bcal bandwidth
    const Index n = ops.Bcal.size();
    BandedMatrix M(n, ops.Bcal.lower_bandwidth(), ops.Bcal.upper_bandwidth());
    const Index kl = ops.Bcal.lower_bandwidth(), ku = ops.Bcal.upper_bandwidth();
    for (Index j = 0; j < n; ++j) {
        const Index ilo = std::max<Index>(0, j - ku);
        const Index ihi = std::min<Index>(n - 1, j + kl);
        for (Index i = ilo; i <= ihi; ++i) {
            const double v = ops.Acal(i, j) + sign * 0.5 * dt * ops.Bcal(i, j);
            if (v != 0.0) M.at(i, j) = v;
        }
    }
    return M;
}

}  // namespace

CnStepper::CnStepper(const BeamProblem& p, const Grid& g)
    : problem_(&p),
      grid_(g),
      right_(combine(assemble_block(p, g), g.dt, +1.0)),
      left_mat_(combine(assemble_block(p, g), g.dt, -1.0)),
      left_(left_mat_) {}

StateVector CnStepper::step(const StateVector& U, double t) const {
    return step_with_forces(U, boundary_force(*problem_, grid_, t),
                            boundary_force(*problem_, grid_, t + grid_.dt));
}

StateVector CnStepper::step_with_forces(const StateVector& U,
                                        const Eigen::Ref<const Eigen::VectorXd>& F_n,
                                        const Eigen::Ref<const Eigen::VectorXd>& F_n1) const {
    const Index n = U.phi.size();
    Eigen::VectorXd stacked(2 * n);
    stacked.head(n) = U.phi;
    stacked.tail(n) = U.psi;

    Eigen::VectorXd rhs = right_.apply(interleave(stacked));
    rhs += 0.5 * grid_.dt * interleave(F_n + F_n1);
    left_.solve_in_place(rhs);

    const Eigen::VectorXd next = deinterleave(rhs);
    StateVector out;
    out.phi = next.head(n);
    out.psi = next.tail(n);
    out.time_index = U.time_index + 1;
    return out;
}

Eigen::VectorXd recover_u(const Eigen::Ref<const Eigen::VectorXd>& psi, double t,
                          const BeamProblem& p, const Grid& g) {
    const Index n = g.nx - 1;
    if (psi.size() != n) throw std::invalid_argument("recover_u: psi length must be nx-1");
    const double h2 = g.h * g.h;

    const double u0 = eval(p.mu0, 0.0, t), uN = eval(p.mu1, 0.0, t);
    const double psi0 = eval(p.mu2, 0.0, t), psiN = eval(p.mu3, 0.0, t);

    Eigen::VectorXd rhs = -build_A(n).apply(psi);
    rhs(0) += -psi0 / 12 + u0 / h2;
    rhs(n - 1) += -psiN / 12 + uN / h2;

    const Eigen::VectorXd interior = tridiag_solve(build_B(n, g.h), rhs);
    Eigen::VectorXd u(g.nx + 1);
    u(0) = u0;
    u.segment(1, n) = interior;
    u(g.nx) = uN;
    return u;
}

Trajectory solve(const BeamProblem& p, const Grid& g, long store_every) {
    const CnStepper stepper(p, g);
    Trajectory traj;
    traj.grid = g;

    StateVector U = initial_state(p, g);
    auto store = [&](const StateVector& state) {
        const double t = state.time_index * g.dt;
        traj.stored_steps.push_back(state.time_index);
        traj.states.push_back(state);
        traj.displacements.push_back(recover_u(state.psi, t, p, g));
    };
    if (store_every > 0) store(U);

    Eigen::VectorXd F_n = boundary_force(p, g, 0.0);
    for (long step = 0; step < g.nt; ++step) {
        const double t_next = (step + 1) * g.dt;
        Eigen::VectorXd F_n1 = boundary_force(p, g, t_next);
        U = stepper.step_with_forces(U, F_n, F_n1);
        F_n.swap(F_n1);
        if ((store_every > 0 && U.time_index % store_every == 0 && U.time_index != g.nt)
            || U.time_index == g.nt)
            store(U);
    }
    return traj;
}

}  // namespace cbeam
