// Command-line front end: solve a beam problem, reproduce convergence
// tables, or run the spectrum-based stability and consistency checks.
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "cbeam/config.hpp"
#include "cbeam/errors.hpp"

namespace {

void add_common_options(CLI::App* cmd, std::shared_ptr<std::map<std::string, std::string>> sink) {
    static const std::pair<const char*, const char*> options[] = {
        {"--example", "builtin problem id (1, 2 or 3)"},
        {"--u-exact", "exact solution expression; data and forcing are derived from it"},
        {"--xi1", "initial displacement (custom problems)"},
        {"--xi2", "initial velocity (custom problems)"},
        {"--mu0", "displacement trace at x=0"},
        {"--mu1", "displacement trace at x=L"},
        {"--mu2", "moment trace at x=0"},
        {"--mu3", "moment trace at x=L"},
        {"--f", "forcing expression (custom problems)"},
        {"--EI", "flexural rigidity"},
        {"--rho", "linear density"},
        {"--c", "damping coefficient"},
        {"--L", "beam length (default 1)"},
        {"--ladder", "comma-separated spatial resolutions, e.g. 32,64,128"},
        {"--dt", "time step: h2 for the dt = h^2 coupling, or a number"},
        {"--t", "evaluation/horizon time (default 1)"},
        {"--nx", "spatial resolution for solve/stability"},
        {"--out", "output CSV path, '-' for stdout (default)"},
    };
    for (const auto& [flag, help] : options) {
        std::string key = flag + 2;
        for (auto& ch : key)
            if (ch == '-') ch = '_';
        cmd->add_option_function<std::string>(
            flag, [sink, key](const std::string& v) { (*sink)[key] = v; }, help);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compact fourth-order solver for the damped beam equation"};
    app.require_subcommand(0, 1);

    std::string config_path;
    app.add_option("--config", config_path, "key = value configuration file");

    auto sink = std::make_shared<std::map<std::string, std::string>>();
    add_common_options(&app, sink);
    const char* commands[] = {"solve", "converge", "stability", "consistency"};
    const char* descriptions[] = {
        "march the scheme and write the final displacement profile",
        "error table over a resolution ladder against the exact solution",
        "spectrum of the amplification matrix and the stability flag",
        "truncation-residual order fits in space and time",
    };
    for (int i = 0; i < 4; ++i) {
        CLI::App* sub = app.add_subcommand(commands[i], descriptions[i]);
        sub->fallthrough();  // let --config after the subcommand reach the parent
        add_common_options(sub, sink);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        cbeam::RunConfig cfg;
        if (!config_path.empty()) cfg = cbeam::load_config(config_path);
        for (const auto* sub : app.get_subcommands())
            cbeam::apply_setting(cfg, "command", sub->get_name(), "flags");
        for (const auto& [key, value] : *sink) cbeam::apply_setting(cfg, key, value, "flags");
        cbeam::validate(cfg);
        return cbeam::run(cfg);
    } catch (const cbeam::ConfigError& e) {
        std::cerr << "cbeam: " << e.what() << '\n';
        return 1;
    } catch (const cbeam::ParseError& e) {
        std::cerr << "cbeam: expression error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "cbeam: " << e.what() << '\n';
        return 1;
    }
}
