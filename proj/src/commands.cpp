#include "evodp/commands.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>

#include "evodp/analysis.hpp"
#include "evodp/csv_io.hpp"
#include "evodp/oracle.hpp"
#include "evodp/parallel.hpp"

namespace evodp {

namespace {

std::string out_path(const RunConfig& cfg, const std::string& file) {
    std::filesystem::create_directories(cfg.out_dir);
    return (std::filesystem::path(cfg.out_dir) / file).string();
}

void check_tables_match_problem(const DpTables& tables, const ProblemModel& problem) {
    if (tables.f_min != problem.f_min() || tables.f_max != problem.f_max()) {
        throw std::runtime_error(
            "tables fitness range does not match the configured problem");
    }
}

}  // namespace

void cmd_solve(const RunConfig& cfg) {
    validate_config(cfg);
    const ProblemModel problem = make_problem(cfg);
    const RateGrid grid = build_grid(cfg.grid, problem.f_min(), problem.f_max());

    std::cerr << "solving " << problem.name() << " n=" << problem.n()
              << " lambda=" << cfg.lambda << " provider=" << cfg.provider
              << " levels=" << grid.levels() << " workers=" << cfg.workers
              << std::endl;

    DpTables tables;
    if (cfg.provider == "exact") {
        if (!problem.om_decomposable()) {
            throw std::runtime_error("exact provider needs an OM-decomposable problem");
        }
        tables = solve_exact(problem, grid, cfg.lambda, cfg.workers);
    } else {
        tables = solve_mc(problem, grid, cfg.lambda, make_mc_config(cfg), cfg.workers);
    }

    if (!tables.infinite_levels.empty()) {
        std::cerr << "warning: " << tables.infinite_levels.size()
                  << " fitness level(s) have infinite optimal time" << std::endl;
    }

    write_tables_csv(out_path(cfg, "tables.csv"), tables);
    write_optimal_csv(out_path(cfg, "optimal.csv"), tables);

    const ExtendedTime bound =
        lower_bound(tables, problem.initial_fitness_distribution());
    std::cout << "problem=" << problem.name() << " n=" << problem.n()
              << " lambda=" << cfg.lambda
              << " lower_bound_iterations=" << format_time(bound)
              << " lower_bound_evaluations="
              << format_time(bound.scaled_by(static_cast<double>(cfg.lambda)))
              << " infinite_levels=" << tables.infinite_levels.size() << std::endl;
}

void cmd_simulate(const RunConfig& cfg) {
    validate_config(cfg);
    const ProblemModel problem = make_problem(cfg);
    const ControlPolicy policy = make_policy(cfg);

    std::cerr << "simulating " << cfg.runs << " run(s) of policy=" << cfg.policy
              << " on " << problem.name() << " n=" << problem.n()
              << " lambda=" << cfg.lambda << std::endl;

    std::vector<RunTrace> runs(static_cast<std::size_t>(cfg.runs));
    parallel_for(runs.size(), cfg.workers, [&](std::size_t run) {
        Rng rng = make_stream(cfg.seed, {0x72756e73ULL, run});
        runs[run] = run_ea(problem, cfg.lambda, policy, cfg.budget, rng);
    });

    write_trace_csv(out_path(cfg, "trace.csv"), runs);
    write_runs_csv(out_path(cfg, "runs.csv"), runs);

    long long finished = 0;
    double mean = 0.0;
    for (const RunTrace& run : runs) {
        if (run.reached_optimum) {
            ++finished;
            mean += static_cast<double>(run.iterations);
        }
    }
    mean = finished > 0 ? mean / static_cast<double>(finished) : 0.0;
    double var = 0.0;
    for (const RunTrace& run : runs) {
        if (run.reached_optimum) {
            const double dev = static_cast<double>(run.iterations) - mean;
            var += dev * dev;
        }
    }
    const double stderr_mean =
        finished > 1 ? std::sqrt(var / static_cast<double>(finished - 1) /
                                 static_cast<double>(finished))
                     : 0.0;
    std::cout << "runs=" << cfg.runs << " finished=" << finished
              << " mean_iterations=" << format_double(mean)
              << " stderr=" << format_double(stderr_mean) << std::endl;
}

void cmd_regret(const RunConfig& cfg, const std::string& tables_path,
                const std::string& trace_path) {
    validate_config(cfg);
    const DpTables tables = read_tables_csv(tables_path);
    const std::vector<RunTrace> runs = read_trace_csv(trace_path);

    std::vector<std::vector<RegretPoint>> per_run;
    per_run.reserve(runs.size());
    for (const RunTrace& run : runs) {
        per_run.push_back(regret_trace(run, tables));
    }
    write_regret_csv(out_path(cfg, "regret.csv"), per_run);

    std::size_t points = 0;
    for (const auto& run : per_run) points += run.size();
    std::cout << "runs=" << runs.size() << " regret_points=" << points << std::endl;
}

void cmd_heatmap(const RunConfig& cfg, const std::string& tables_path) {
    validate_config(cfg);
    const DpTables tables = read_tables_csv(tables_path);
    const std::vector<HeatmapCell> cells = heatmap(tables);
    write_heatmap_csv(out_path(cfg, "heatmap.csv"), cells);
    std::cout << "levels=" << tables.f_max - tables.f_min
              << " cells=" << cells.size() << std::endl;
}

void cmd_lowerbound(const RunConfig& cfg, const std::string& tables_path) {
    validate_config(cfg);
    const ProblemModel problem = make_problem(cfg);
    const DpTables tables = read_tables_csv(tables_path);
    check_tables_match_problem(tables, problem);
    const ExtendedTime bound =
        lower_bound(tables, problem.initial_fitness_distribution());
    write_lowerbound_csv(out_path(cfg, "lowerbound.csv"), problem.name(),
                         problem.n(), cfg.lambda, bound);
    std::cout << "problem=" << problem.name() << " n=" << problem.n()
              << " lambda=" << cfg.lambda
              << " lower_bound_iterations=" << format_time(bound)
              << " lower_bound_evaluations="
              << format_time(bound.scaled_by(static_cast<double>(cfg.lambda)))
              << std::endl;
}

}  // namespace evodp
