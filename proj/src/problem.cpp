#include "cbeam/problem.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

namespace cbeam {

BeamProblem make_problem(double EI, double rho, double c, double L, double T, Expr xi1, Expr xi2,
                         Expr mu0, Expr mu1, Expr mu2, Expr mu3, Expr f,
                         std::optional<Expr> u_exact) {
    if (!(EI > 0.0)) throw std::invalid_argument("BeamProblem: EI must be positive");
    if (!(rho > 0.0)) throw std::invalid_argument("BeamProblem: rho must be positive");
    if (!(c >= 0.0)) throw std::invalid_argument("BeamProblem: c must be non-negative");
    if (!(L > 0.0)) throw std::invalid_argument("BeamProblem: L must be positive");
    if (!(T > 0.0)) throw std::invalid_argument("BeamProblem: T must be positive");
    if (c == 0.0)
        std::cerr << "warning: c = 0 (no damping); the spectrum check still runs but the "
                     "stability guarantee is stated for c > 0\n";

    const double corner0 = eval(xi1, 0.0, 0.0) - eval(mu0, 0.0, 0.0);
    const double cornerL = eval(xi1, L, 0.0) - eval(mu1, 0.0, 0.0);
    if (std::abs(corner0) > 1e-10 || std::abs(cornerL) > 1e-10)
        throw std::invalid_argument(
            "BeamProblem: initial and boundary data disagree at a corner (|delta| = "
            + std::to_string(std::max(std::abs(corner0), std::abs(cornerL))) + ")");

    BeamProblem p;
    p.EI = EI;
    p.rho = rho;
    p.c = c;
    p.L = L;
    p.T = T;
    p.u_exact = std::move(u_exact);
    p.xi1 = std::move(xi1);
    p.xi2 = std::move(xi2);
    p.mu0 = std::move(mu0);
    p.mu1 = std::move(mu1);
    p.mu2 = std::move(mu2);
    p.mu3 = std::move(mu3);
    p.f = std::move(f);
    p.mu0_t = diff(p.mu0, Var::t);
    p.mu0_tt = diff(p.mu0_t, Var::t);
    p.mu1_t = diff(p.mu1, Var::t);
    p.mu1_tt = diff(p.mu1_t, Var::t);
    p.mu2_t = diff(p.mu2, Var::t);
    p.mu3_t = diff(p.mu3, Var::t);
    return p;
}

BeamProblem make_manufactured_problem(Expr u, double EI, double rho, double c, double L,
                                      double T) {
    const Expr u_t = diff(u, Var::t);
    const Expr u_xx = diff(diff(u, Var::x), Var::x);
    return make_problem(EI, rho, c, L, T,
                        /*xi1=*/substitute(u, Var::t, 0.0),
                        /*xi2=*/substitute(u_t, Var::t, 0.0),
                        /*mu0=*/substitute(u, Var::x, 0.0),
                        /*mu1=*/substitute(u, Var::x, L),
                        /*mu2=*/substitute(u_xx, Var::x, 0.0),
                        /*mu3=*/substitute(u_xx, Var::x, L),
                        /*f=*/manufacture_forcing(u, EI, rho, c),
                        /*u_exact=*/u);
}

BeamProblem builtin_example(int id, double T) {
    switch (id) {
        case 1:
            return make_manufactured_problem(parse("sin(pi*x)*cos(pi*t)"), 98.0, 0.685, 0.75, 1.0,
                                             T);
        case 2:
            return make_manufactured_problem(parse("sinh(t)*cos(pi*x)"), 1.0, 1.0, 1.0, 1.0, T);
        case 3:
            return make_manufactured_problem(parse("exp(-t)*sin(pi*x)"), 98.0, 0.68, 7.5, 1.0, T);
        default:
            throw std::invalid_argument("builtin_example: id must be 1, 2 or 3");
    }
}

Grid make_grid(const BeamProblem& p, int nx, long nt) {
    if (nx < 3) throw std::invalid_argument("Grid: nx must be >= 3");
    if (nt < 1) throw std::invalid_argument("Grid: nt must be >= 1");
    return Grid{nx, nt, p.L / nx, p.T / static_cast<double>(nt)};
}

long steps_for_h2(const BeamProblem& p, int nx) {
    const double h = p.L / nx;
    return std::max(1L, std::lround(p.T / (h * h)));
}

long steps_for_dt(const BeamProblem& p, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("steps_for_dt: dt must be positive");
    return std::max(1L, std::lround(p.T / dt));
}

}  // namespace cbeam
