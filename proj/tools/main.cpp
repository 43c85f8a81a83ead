#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "evodp/commands.hpp"
#include "evodp/config.hpp"

namespace {

// Deferred key/value overrides; flags win over the config file, so the
// file is applied first and these afterwards.
struct Override {
    std::string key;
    std::string value;
};

void add_override_option(CLI::App* cmd, std::vector<Override>& overrides,
                         const std::string& flag, const std::string& key,
                         const std::string& help) {
    cmd->add_option_function<std::string>(
           flag,
           [&overrides, key](const std::string& value) {
               overrides.push_back({key, value});
           },
           help)
        ->type_name("VALUE");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal dynamic mutation-rate schedules and runtime lower "
                 "bounds for (1+lambda) evolutionary algorithms"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<Override> overrides;
    app.add_option("--config", config_path, "key = value configuration file")
        ->type_name("FILE");

    auto add_common = [&](CLI::App* cmd) {
        add_override_option(cmd, overrides, "--seed", "seed", "root random seed");
        add_override_option(cmd, overrides, "--workers", "workers",
                            "worker thread count");
        add_override_option(cmd, overrides, "--out-dir", "out_dir",
                            "output directory");
        add_override_option(cmd, overrides, "--problem", "problem",
                            "onemax or ruggedness");
        add_override_option(cmd, overrides, "--n", "n", "problem size");
        add_override_option(cmd, overrides, "--lambda", "ea.lambda",
                            "offspring per iteration");
    };

    CLI::App* solve = app.add_subcommand(
        "solve", "compute rate tables with the Monte-Carlo transition model");
    add_common(solve);
    add_override_option(solve, overrides, "--provider", "provider", "mc or exact");
    add_override_option(solve, overrides, "--mc-iterations", "mc.iterations",
                        "max simulated iterations per cell");
    add_override_option(solve, overrides, "--mc-successes", "mc.successes",
                        "early-stop success count per cell");

    CLI::App* solve_exact = app.add_subcommand(
        "solve-exact", "compute rate tables with the exact transition model");
    add_common(solve_exact);

    CLI::App* simulate =
        app.add_subcommand("simulate", "run the EA under a control policy");
    add_common(simulate);
    add_override_option(simulate, overrides, "--policy", "policy",
                        "static, ab, or two-rate");
    add_override_option(simulate, overrides, "--p", "policy.p",
                        "static/initial rate (number, 1/n, or 1/n^2)");
    add_override_option(simulate, overrides, "--p-min", "policy.p_min",
                        "lower rate bound (number, 1/n, or 1/n^2)");
    add_override_option(simulate, overrides, "--p-max", "policy.p_max",
                        "upper rate bound");
    add_override_option(simulate, overrides, "--runs", "runs", "number of runs");
    add_override_option(simulate, overrides, "--budget", "budget",
                        "iteration budget per run");

    std::string tables_path = "tables.csv";
    std::string trace_path = "trace.csv";

    CLI::App* regret = app.add_subcommand(
        "regret", "per-iteration regret of recorded runs against stored tables");
    add_common(regret);
    regret->add_option("--tables", tables_path, "tables.csv path")->type_name("FILE");
    regret->add_option("--trace", trace_path, "trace.csv path")->type_name("FILE");

    CLI::App* heatmap = app.add_subcommand(
        "heatmap", "relative-efficiency heatmap from stored tables");
    add_common(heatmap);
    heatmap->add_option("--tables", tables_path, "tables.csv path")->type_name("FILE");

    CLI::App* lowerbound = app.add_subcommand(
        "lowerbound", "runtime lower bound from stored tables");
    add_common(lowerbound);
    lowerbound->add_option("--tables", tables_path, "tables.csv path")->type_name("FILE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        evodp::RunConfig cfg;
        if (!config_path.empty()) evodp::apply_config_file(cfg, config_path);
        for (const Override& o : overrides) {
            evodp::apply_config_entry(cfg, o.key, o.value);
        }

        if (solve->parsed()) {
            evodp::cmd_solve(cfg);
        } else if (solve_exact->parsed()) {
            cfg.provider = "exact";
            evodp::cmd_solve(cfg);
        } else if (simulate->parsed()) {
            evodp::cmd_simulate(cfg);
        } else if (regret->parsed()) {
            evodp::cmd_regret(cfg, tables_path, trace_path);
        } else if (heatmap->parsed()) {
            evodp::cmd_heatmap(cfg, tables_path);
        } else if (lowerbound->parsed()) {
            evodp::cmd_lowerbound(cfg, tables_path);
        }
        return 0;
    } catch (const evodp::ConfigError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 3;
    }
}
