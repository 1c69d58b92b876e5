#include "cbeam/csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace cbeam {

std::string format_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

void write_solve_csv(std::ostream& os, const BeamProblem& p, const Grid& g,
                     const Eigen::Ref<const Eigen::VectorXd>& u, double t) {
    const bool exact = p.u_exact.has_value();
    os << (exact ? "x,u_numeric,u_exact,error\n" : "x,u_numeric\n");
    for (Eigen::Index i = 0; i <= g.nx; ++i) {
        const double x = i * g.h;
        os << format_sci(x) << ',' << format_sci(u(i));
        if (exact) {
            const double ue = eval(*p.u_exact, x, t);
            os << ',' << format_sci(ue) << ',' << format_sci(std::abs(u(i) - ue));
        }
        os << '\n';
    }
}

void write_convergence_csv(std::ostream& os, const ConvergenceReport& rep) {
    os << "mesh,Nx,h,error,order\n";
    for (std::size_t k = 0; k < rep.rows.size(); ++k) {
        const auto& r = rep.rows[k];
        os << (k + 1) << ',' << r.nx << ',' << format_sci(r.h) << ',' << format_sci(r.error)
           << ',';
        if (!std::isnan(r.order)) os << format_sci(r.order);
        os << '\n';
    }
    os << "average,,,," << format_sci(rep.average_order) << '\n';
}

void write_stability_csv(std::ostream& os, const StabilityReport& rep) {
    os << "Nx,dt,EI,rho,c,max_re_eig,rho_Q,pass\n";
    os << rep.nx << ',' << format_sci(rep.dt) << ',' << format_sci(rep.EI) << ','
       << format_sci(rep.rho) << ',' << format_sci(rep.c) << ',' << format_sci(rep.max_re_system)
       << ',' << format_sci(rep.rho_Q) << ',' << (rep.pass ? 1 : 0) << '\n';
}

void write_consistency_csv(std::ostream& os, const ConsistencyReport& rep) {
    os << "series,Nx,h,dt,residual\n";
    for (const auto& s : rep.space)
        os << "space," << s.nx << ',' << format_sci(s.h) << ',' << format_sci(s.dt) << ','
           << format_sci(s.residual) << '\n';
    for (const auto& s : rep.time)
        os << "time," << s.nx << ',' << format_sci(s.h) << ',' << format_sci(s.dt) << ','
           << format_sci(s.residual) << '\n';
    os << "space_order,,,," << format_sci(rep.spatial_order) << '\n';
    os << "time_order,,,," << format_sci(rep.temporal_order) << '\n';
}

}  // namespace cbeam
