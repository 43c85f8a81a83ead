#pragma once

#include <string>
#include <utility>
#include <vector>

#include "evodp/analysis.hpp"
#include "evodp/control.hpp"
#include "evodp/dp.hpp"

namespace evodp {

// Shortest round-trip decimal form, locale independent.
std::string format_double(double v);
// Same, with infinity rendered as the token "inf".
std::string format_time(ExtendedTime t);

double parse_double(const std::string& field, const std::string& column);
ExtendedTime parse_time(const std::string& field, const std::string& column);

// tables.csv: fitness,rate,T_iterations — one row per grid cell, fitness
// ascending then rate ascending.
void write_tables_csv(const std::string& path, const DpTables& tables);

// Rebuilds grid and T from tables.csv and recomputes the derived columns;
// meta.provider is set to "csv".
DpTables read_tables_csv(const std::string& path);

// optimal.csv: fitness,T_star_iterations,p_opt — includes the optimum row
// with T_star 0 and the placeholder rate 0.
void write_optimal_csv(const std::string& path, const DpTables& tables);

// trace.csv: run_id,iteration,fitness,rate,best_offspring_fitness,success
void write_trace_csv(const std::string& path,
                     const std::vector<RunTrace>& runs);
std::vector<RunTrace> read_trace_csv(const std::string& path);

// runs.csv: run_id,iterations_to_optimum (count or `budget_exhausted`)
void write_runs_csv(const std::string& path, const std::vector<RunTrace>& runs);

// heatmap.csv: fitness,rate,C,alpha_f,T
void write_heatmap_csv(const std::string& path,
                       const std::vector<HeatmapCell>& cells);

// regret.csv: run_id,iteration,fitness,rate,mapped_rate,regret,infinite
void write_regret_csv(const std::string& path,
                      const std::vector<std::vector<RegretPoint>>& per_run);

// lowerbound.csv: problem,n,lambda,T_iterations,T_evaluations
void write_lowerbound_csv(const std::string& path, const std::string& problem,
                          int n, int lambda, ExtendedTime iterations);

}  // namespace evodp
