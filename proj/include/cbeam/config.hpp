#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cbeam/problem.hpp"

namespace cbeam {

enum class Command { Solve, Converge, Stability, Consistency };

/// A validated run request: one problem source (builtin example or custom
/// expressions), the command, and its parameters. Assembled from a config
/// file, command-line flags, or both (flags win).
struct RunConfig {
    std::optional<Command> command;

    std::optional<int> example;           // builtin problem id 1..3
    std::optional<std::string> u_exact;   // custom manufactured problem
    std::optional<std::string> xi1, xi2, mu0, mu1, mu2, mu3, f;  // fully custom data
    std::optional<double> EI, rho, c, L;

    std::vector<int> ladder;     // converge / consistency resolutions
    bool dt_h2 = true;           // dt rule: h^2 coupling ...
    std::optional<double> dt;    // ... or an explicit step
    double t_eval = 1.0;
    int nx = 0;                  // solve / stability resolution
    std::string out = "-";       // CSV destination; "-" is stdout
};

/// Parse a key = value config file (# comments); throws ConfigError with the
/// offending key, and ParseError for bad expressions.
RunConfig load_config(const std::string& path);

/// Apply one key=value setting; shared between the file loader and the CLI.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value,
                   const std::string& where);

/// Completeness and consistency checks; throws ConfigError naming the field.
void validate(const RunConfig& cfg);

/// Instantiate the problem described by the config (horizon = t_eval).
BeamProblem build_problem(const RunConfig& cfg);

/// Execute the command, writing CSV to cfg.out ("-" = stdout).
/// Exit status: 0 success; 2 embedded assertion failed (stability pass flag
/// false); 3 I/O error; 4 numerical error.
int run(const RunConfig& cfg);

}  // namespace cbeam
