#pragma once

#include <optional>

#include "cbeam/expr.hpp"

namespace cbeam {

/// Physical constants, domain, and the full set of data functions for the
/// damped fourth-order beam model
///   EI u_xxxx + rho u_tt + c u_t = f   on [0,L] x [0,T],
/// with simply supported ends: u and u_xx prescribed at x = 0 and x = L.
struct BeamProblem {
    double EI, rho, c, L, T;
    std::optional<Expr> u_exact;
    Expr xi1, xi2;            // initial displacement and velocity, in x
    Expr mu0, mu1, mu2, mu3;  // boundary traces of u and u_xx at x=0, x=L, in t
    Expr f;                   // forcing, in (x, t)
    // derivatives of the boundary traces needed by the semidiscrete forcing
    Expr mu0_t, mu0_tt, mu1_t, mu1_tt, mu2_t, mu3_t;
};

/// Validates constants (EI, rho > 0; c >= 0 with a warning at 0; L, T > 0)
/// and corner compatibility |xi1(0) - mu0(0)|, |xi1(L) - mu1(0)| <= 1e-10.
BeamProblem make_problem(double EI, double rho, double c, double L, double T, Expr xi1, Expr xi2,
                         Expr mu0, Expr mu1, Expr mu2, Expr mu3, Expr f,
                         std::optional<Expr> u_exact = std::nullopt);

/// All data functions and the forcing derived symbolically from u_exact.
BeamProblem make_manufactured_problem(Expr u_exact, double EI, double rho, double c,
                                      double L = 1.0, double T = 1.0);

/// Built-in demonstration problems, ids 1..3.
BeamProblem builtin_example(int id, double T = 1.0);

/// Uniform space-time grid.
struct Grid {
    int nx;     // spatial intervals; nodes are x_i = i*h, i = 0..nx
    long nt;    // time steps
    double h;   // L / nx
    double dt;  // T / nt
};

Grid make_grid(const BeamProblem& p, int nx, long nt);

/// Step counts realizing the dt rules; dt is then T / nt exactly.
long steps_for_h2(const BeamProblem& p, int nx);
long steps_for_dt(const BeamProblem& p, double dt);

}  // namespace cbeam
