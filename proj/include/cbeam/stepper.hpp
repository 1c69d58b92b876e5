#pragma once

#include <vector>

#include <Eigen/Core>

#include "cbeam/discretize.hpp"
#include "cbeam/problem.hpp"

namespace cbeam {

/// Trapezoidal (Crank-Nicolson) time stepping of the semidiscrete system
///   Acal U_t = Bcal U + F(t):
///   (Acal - dt/2 Bcal) U^{n+1} = (Acal + dt/2 Bcal) U^n + dt/2 (F^{n+1} + F^n).
/// The left matrix is factored once; a stepper is immutable afterwards and
/// may be shared across threads.
class CnStepper {
public:
    CnStepper(const BeamProblem& p, const Grid& g);

    const Grid& grid() const { return grid_; }

    /// One step from time t = U.time_index * dt; evaluates F at t and t+dt.
    StateVector step(const StateVector& U, double t) const;

    /// Same, with both force vectors (stacked ordering) supplied by the
    /// caller so F can be evaluated once per step across the time loop.
    StateVector step_with_forces(const StateVector& U,
                                 const Eigen::Ref<const Eigen::VectorXd>& F_n,
                                 const Eigen::Ref<const Eigen::VectorXd>& F_n1) const;

    /// Left operator Acal - dt/2 Bcal and its factorization.
    const BandedMatrix& left_matrix() const { return left_mat_; }
    const BandedFactorization& left_factorization() const { return left_; }
    /// Right-hand operator Acal + dt/2 Bcal (interleaved banded form).
    const BandedMatrix& right_matrix() const { return right_; }

private:
    const BeamProblem* problem_;
    Grid grid_;
    BandedMatrix right_;
    BandedMatrix left_mat_;
    BandedFactorization left_;
};

/// Displacement samples recovered from the moment variable by the compact
/// relation, with the boundary data folded in; length nx+1 with u(0) and
/// u(L) imposed exactly.
Eigen::VectorXd recover_u(const Eigen::Ref<const Eigen::VectorXd>& psi, double t,
                          const BeamProblem& p, const Grid& g);

/// States and recovered displacement profiles at the stored time indices.
struct Trajectory {
    Grid grid;
    std::vector<long> stored_steps;
    std::vector<StateVector> states;
    std::vector<Eigen::VectorXd> displacements;

    const Eigen::VectorXd& final_displacement() const { return displacements.back(); }
};

/// Run the scheme from the initial state through nt steps. store_every = 0
/// keeps only the final time level; k > 0 additionally stores every k-th
/// level (and the initial one).
Trajectory solve(const BeamProblem& p, const Grid& g, long store_every = 0);

}  // namespace cbeam
