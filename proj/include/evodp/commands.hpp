#pragma once

#include <string>

#include "evodp/config.hpp"

namespace evodp {

// Each command writes its CSV outputs into cfg.out_dir and prints a short
// machine-readable summary to stdout; progress goes to stderr.

// tables.csv + optimal.csv via the configured transition provider.
void cmd_solve(const RunConfig& cfg);

// trace.csv + runs.csv for cfg.runs independent EA runs.
void cmd_simulate(const RunConfig& cfg);

// regret.csv for every run in the trace against the given tables.
void cmd_regret(const RunConfig& cfg, const std::string& tables_path,
                const std::string& trace_path);

// heatmap.csv from stored tables.
void cmd_heatmap(const RunConfig& cfg, const std::string& tables_path);

// lowerbound.csv from stored tables plus the configured problem.
void cmd_lowerbound(const RunConfig& cfg, const std::string& tables_path);

}  // namespace evodp
