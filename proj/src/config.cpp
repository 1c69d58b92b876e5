#include "cbeam/config.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cbeam/analysis.hpp"
#include "cbeam/csv.hpp"
#include "cbeam/stepper.hpp"

namespace cbeam {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& value, const std::string& where) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ConfigError(where + ": expected a number, got '" + value + "'");
    }
}

int parse_int(const std::string& value, const std::string& where) {
    int v = 0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
    if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
        throw ConfigError(where + ": expected an integer, got '" + value + "'");
    return v;
}

}  // namespace

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value,
                   const std::string& where) {
    const std::string at = where + "." + key;
    if (key == "command") {
        if (value == "solve") cfg.command = Command::Solve;
        else if (value == "converge") cfg.command = Command::Converge;
        else if (value == "stability") cfg.command = Command::Stability;
        else if (value == "consistency") cfg.command = Command::Consistency;
        else
            throw ConfigError(at + ": must be solve, converge, stability or consistency");
    } else if (key == "example") {
        cfg.example = parse_int(value, at);
    } else if (key == "u_exact") {
        cfg.u_exact = value;
    } else if (key == "xi1") cfg.xi1 = value;
    else if (key == "xi2") cfg.xi2 = value;
    else if (key == "mu0") cfg.mu0 = value;
    else if (key == "mu1") cfg.mu1 = value;
    else if (key == "mu2") cfg.mu2 = value;
    else if (key == "mu3") cfg.mu3 = value;
    else if (key == "f") cfg.f = value;
    else if (key == "EI") cfg.EI = parse_double(value, at);
    else if (key == "rho") cfg.rho = parse_double(value, at);
    else if (key == "c") cfg.c = parse_double(value, at);
    else if (key == "L") cfg.L = parse_double(value, at);
    else if (key == "ladder") {
        cfg.ladder.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.ladder.push_back(parse_int(trim(item), at));
    } else if (key == "dt") {
        if (value == "h2") {
            cfg.dt_h2 = true;
            cfg.dt.reset();
        } else {
            cfg.dt_h2 = false;
            cfg.dt = parse_double(value, at);
            if (!(*cfg.dt > 0.0)) throw ConfigError(at + ": dt must be positive");
        }
    } else if (key == "t") {
        cfg.t_eval = parse_double(value, at);
    } else if (key == "nx") {
        cfg.nx = parse_int(value, at);
    } else if (key == "out") {
        cfg.out = value;
    } else {
        throw ConfigError(at + ": unknown key");
    }
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config:" + std::to_string(lineno) + ": expected key = value");
        apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)),
                      "config:" + std::to_string(lineno));
    }
    return cfg;
}

void validate(const RunConfig& cfg) {
    if (!cfg.command)
        throw ConfigError("config.command: one of solve, converge, stability, consistency "
                          "is required");

    const bool has_full_custom = cfg.xi1 || cfg.xi2 || cfg.mu0 || cfg.mu1 || cfg.mu2 || cfg.mu3
                                 || cfg.f;
    const bool has_custom = cfg.u_exact.has_value() || has_full_custom;
    if (cfg.example && has_custom)
        throw ConfigError("config.example: builtin example and custom expressions are "
                          "mutually exclusive");
    if (!cfg.example && !has_custom)
        throw ConfigError("config.example: a problem source is required (example or custom "
                          "expressions)");
    if (cfg.example && (*cfg.example < 1 || *cfg.example > 3))
        throw ConfigError("config.example: must be 1, 2 or 3");
    if (cfg.u_exact && !(cfg.EI && cfg.rho && cfg.c))
        throw ConfigError("config.u_exact: EI, rho and c are required with a custom exact "
                          "solution");
    if (!cfg.u_exact && has_full_custom) {
        if (!(cfg.xi1 && cfg.xi2 && cfg.mu0 && cfg.mu1 && cfg.mu2 && cfg.mu3 && cfg.f))
            throw ConfigError("config.xi1: fully custom problems need xi1, xi2, mu0..mu3 and f");
        if (!(cfg.EI && cfg.rho && cfg.c))
            throw ConfigError("config.EI: EI, rho and c are required for custom problems");
    }

    if (!(cfg.t_eval > 0.0)) throw ConfigError("config.t: must be positive");

    const bool ladder_command =
        *cfg.command == Command::Converge || *cfg.command == Command::Consistency;
    if (ladder_command) {
        if (cfg.ladder.empty()) throw ConfigError("config.ladder: must be non-empty for this "
                                                  "command");
        for (const int nx : cfg.ladder)
            if (nx < 3) throw ConfigError("config.ladder: resolutions must be >= 3");
        const bool manufactured = cfg.example.has_value() || cfg.u_exact.has_value();
        if (!manufactured)
            throw ConfigError("config.u_exact: converge and consistency need an exact solution");
    } else {
        if (cfg.nx < 3) throw ConfigError("config.nx: must be >= 3 for this command");
    }
    if (*cfg.command == Command::Stability && cfg.dt_h2 == false && !(*cfg.dt > 0.0))
        throw ConfigError("config.dt: must be positive");
}

BeamProblem build_problem(const RunConfig& cfg) {
    const double T = cfg.t_eval;
    if (cfg.example) return builtin_example(*cfg.example, T);
    if (cfg.u_exact)
        return make_manufactured_problem(parse(*cfg.u_exact), *cfg.EI, *cfg.rho, *cfg.c,
                                         cfg.L.value_or(1.0), T);
    return make_problem(*cfg.EI, *cfg.rho, *cfg.c, cfg.L.value_or(1.0), T, parse(*cfg.xi1),
                        parse(*cfg.xi2), parse(*cfg.mu0), parse(*cfg.mu1), parse(*cfg.mu2),
                        parse(*cfg.mu3), parse(*cfg.f));
}

int run(const RunConfig& cfg) {
    std::ostringstream body;
    int status = 0;
    try {
        const BeamProblem p = build_problem(cfg);
        switch (*cfg.command) {
            case Command::Solve: {
                const long nt = cfg.dt_h2 ? steps_for_h2(p, cfg.nx) : steps_for_dt(p, *cfg.dt);
                const Grid g = make_grid(p, cfg.nx, nt);
                const Eigen::VectorXd u = solve(p, g).final_displacement();
                write_solve_csv(body, p, g, u, p.T);
                break;
            }
            case Command::Converge: {
                const DtRule rule{cfg.dt_h2, cfg.dt.value_or(0.0)};
                write_convergence_csv(body, convergence_table(p, cfg.ladder, cfg.t_eval, rule));
                break;
            }
            case Command::Stability: {
                const long nt = cfg.dt_h2 ? steps_for_h2(p, cfg.nx) : steps_for_dt(p, *cfg.dt);
                const Grid g = make_grid(p, cfg.nx, nt);
                const StabilityReport rep = stability_check(p, g);
                write_stability_csv(body, rep);
                if (!rep.eig_converged) {
                    std::cerr << "cbeam: eigenvalue iteration did not converge\n";
                    status = 4;
                } else if (!rep.pass) {
                    std::cerr << "cbeam: spectral radius " << format_sci(rep.rho_Q)
                              << " exceeds the stability bound\n";
                    status = 2;
                }
                break;
            }
            case Command::Consistency: {
                write_consistency_csv(body, consistency_order(p, cfg.ladder));
                break;
            }
        }
    } catch (const SingularMatrixError& e) {
        std::cerr << "cbeam: " << e.what() << '\n';
        return 4;
    } catch (const EvalError& e) {
        std::cerr << "cbeam: " << e.what() << '\n';
        return 4;
    }

    if (cfg.out == "-") {
        std::cout << body.str();
        std::cout.flush();
        if (!std::cout) return 3;
    } else {
        std::ofstream out(cfg.out, std::ios::binary);
        if (!out) {
            std::cerr << "cbeam: cannot open output file '" << cfg.out << "'\n";
            return 3;
        }
        out << body.str();
        out.flush();
        if (!out) {
            std::cerr << "cbeam: write to '" << cfg.out << "' failed\n";
            return 3;
        }
    }
    return status;
}

}  // namespace cbeam
