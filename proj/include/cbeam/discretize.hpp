#pragma once

#include <Eigen/Core>

#include "cbeam/banded.hpp"
#include "cbeam/problem.hpp"
#include "cbeam/tridiagonal.hpp"

namespace cbeam {

/// Compact-scheme weight matrix diag_n(1/12, 5/6, 1/12).
TridiagMatrix build_A(Index n);

/// Second-difference matrix (1/h^2) diag_n(-1, 2, -1).
TridiagMatrix build_B(Index n, double h);

/// Unknowns at one time level: velocity phi and moment psi at the interior
/// nodes x_1 .. x_{nx-1}.
struct StateVector {
    Eigen::VectorXd phi, psi;
    long time_index = 0;
};

/// The semidiscrete system matrices
///   Acal = [[rho A, 0], [0, A]],  Bcal = [[-c A, EI B], [-B, 0]]
/// realized as banded matrices under the interleaved unknown ordering
/// (phi_1, psi_1, phi_2, psi_2, ...): bandwidths 2 and 3 respectively.
struct BlockOperators {
    BandedMatrix Acal;
    BandedMatrix Bcal;
};

BlockOperators assemble_block(const BeamProblem& p, const Grid& g);

/// Dense stacked-ordering realizations (Phi block then Psi block); used by
/// the spectrum analysis and as the reference for the banded assembly.
Eigen::MatrixXd dense_acal(const BeamProblem& p, const Grid& g);
Eigen::MatrixXd dense_bcal(const BeamProblem& p, const Grid& g);

/// F(t), stacked: F1 carries the compact-weighted forcing plus the boundary
/// terms alpha/beta in its first/last slots, F2 carries alpha'/beta'.
Eigen::VectorXd boundary_force(const BeamProblem& p, const Grid& g, double t);

/// phi^0 from sampled xi2; Psi^0 from the compact moment system solved
/// against the second differences of sampled xi1.
StateVector initial_state(const BeamProblem& p, const Grid& g);

/// Reorder a stacked vector (Phi; Psi) into interleaved form and back.
Eigen::VectorXd interleave(const Eigen::Ref<const Eigen::VectorXd>& stacked);
Eigen::VectorXd deinterleave(const Eigen::Ref<const Eigen::VectorXd>& interleaved);

}  // namespace cbeam
