#pragma once

#include <vector>

#include "cbeam/eigenvalues.hpp"
#include "cbeam/problem.hpp"

namespace cbeam {

/// Spectrum-based stability check of the time-stepping map.
/// pass holds exactly when rho(Q) <= 1 + 1e-10 for the amplification matrix
/// Q = (I - dt/2 M)^-1 (I + dt/2 M), M = Acal^-1 Bcal.
struct StabilityReport {
    int nx = 0;
    double dt = 0.0;
    double EI = 0.0, rho = 0.0, c = 0.0;
    double max_re_system = 0.0;  // max Re of eig(M)
    double rho_Q = 0.0;
    bool eig_converged = true;
    bool pass = false;
};

StabilityReport stability_check(const BeamProblem& p, const Grid& g);

/// Time-step rule for ladder runs: dt = h^2, or a fixed dt (always adjusted
/// so that an integer number of steps lands exactly on the horizon).
struct DtRule {
    bool h_squared = true;
    double dt = 0.0;
};

/// Max-norm displacement errors against the exact solution at t_eval over a
/// ladder of spatial resolutions, with the observed order between rows.
struct ConvergenceRow {
    int nx = 0;
    double h = 0.0, dt = 0.0, error = 0.0;
    double order = 0.0;  // NaN on the first row
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    double average_order = 0.0;
    double t_eval = 0.0;
};

/// Requires p.u_exact. Ladder entries may be computed concurrently
/// (CBEAM_THREADS overrides the worker count); the report order is fixed.
ConvergenceReport convergence_table(const BeamProblem& p, const std::vector<int>& ladder,
                                    double t_eval, DtRule rule = {});

/// Truncation residual of the scheme applied to exact-solution samples,
/// measured at the step nearest T/2, with least-squares order fits: the
/// space series couples dt = h^2, the time series fixes a fine mesh.
struct ConsistencySample {
    int nx = 0;
    double h = 0.0, dt = 0.0, residual = 0.0;
};

struct ConsistencyReport {
    std::vector<ConsistencySample> space;
    std::vector<ConsistencySample> time;
    double spatial_order = 0.0;
    double temporal_order = 0.0;
};

ConsistencyReport consistency_order(const BeamProblem& p, const std::vector<int>& space_ladder,
                                    int time_nx = 256,
                                    const std::vector<double>& time_dts = {0.1, 0.05, 0.025});

}  // namespace cbeam
