#pragma once

#include <iosfwd>
#include <string>

#include <Eigen/Core>

#include "cbeam/analysis.hpp"
#include "cbeam/problem.hpp"

namespace cbeam {

/// Scientific notation with 17 significant digits; enough to round-trip an
/// IEEE double and byte-stable across runs.
std::string format_sci(double v);

/// x, u_numeric[, u_exact, error] profile at the final time of the run.
void write_solve_csv(std::ostream& os, const BeamProblem& p, const Grid& g,
                     const Eigen::Ref<const Eigen::VectorXd>& u, double t);

/// mesh, Nx, h, error, order rows plus a trailing average row.
void write_convergence_csv(std::ostream& os, const ConvergenceReport& rep);

/// One row of spectrum results for a (problem, grid) pair.
void write_stability_csv(std::ostream& os, const StabilityReport& rep);

/// series, Nx, h, dt, residual rows plus the two fitted-order rows.
void write_consistency_csv(std::ostream& os, const ConsistencyReport& rep);

}  // namespace cbeam
