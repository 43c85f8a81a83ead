#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "evodp/extended_time.hpp"
#include "evodp/montecarlo.hpp"
#include "evodp/problems.hpp"

namespace evodp {

/// Descriptors for the union of a multiplicative grid
/// p_i = base * alpha^i and an additive grid p_i = base + i * step.
/// A count of 0 disables the corresponding part.
struct GridSpec {
    double mult_base = 1e-4;
    double mult_alpha = std::pow(10.0, 1.0 / 25.0);
    int mult_count = 101;
    double add_base = 0.0;
    double add_step = 0.0;
    int add_count = 0;
};

/// Candidate mutation rates per fitness level, strictly increasing and in
/// (0, 1]. Levels cover [f_min, f_max); the optimum needs no rates.
class RateGrid {
  public:
    RateGrid(int f_min, int f_max, std::vector<double> rates_for_all_levels);
    RateGrid(int f_min, int f_max, std::vector<std::vector<double>> per_level);

    int f_min() const { return f_min_; }
    int f_max() const { return f_max_; }
    int levels() const { return f_max_ - f_min_; }
    const std::vector<double>& rates(int fitness) const;

  private:
    void validate() const;

    int f_min_;
    int f_max_;
    std::vector<std::vector<double>> rows_;  // indexed by fitness - f_min
};

// Sorted, deduplicated union of the configured grids, shared by all levels.
RateGrid build_grid(const GridSpec& spec, int f_min, int f_max);

struct DpMeta {
    std::string problem;
    int n = 0;
    int lambda = 0;
    std::string provider;  // "mc", "exact", or "csv"
    McConfig mc;
};

/// Output of the backward sweep: expected remaining iterations T[f][j] for
/// rate index j at fitness f, the per-level optimum T_star[f] with its
/// minimizing rate P_opt[f], all indexed by f - f_min. P_opt at the optimum
/// is 0 (no rate applies there).
struct DpTables {
    int f_min = 0;
    int f_max = 0;
    RateGrid grid{0, 1, std::vector<double>{1.0}};
    std::vector<std::vector<ExtendedTime>> T;
    std::vector<ExtendedTime> T_star;
    std::vector<double> P_opt;
    std::vector<int> infinite_levels;  // fitness values with T_star == inf
    DpMeta meta;

    int t_index(int fitness) const { return fitness - f_min; }
};

using TransitionProvider =
    std::function<TransitionDistribution(int fitness, double rate,
                                         std::size_t rate_index)>;

// Expected remaining iterations when the current level uses the given
// transition distribution and optimal play afterwards costs tail_above[i-1]
// at fitness f + i. Infinite when no improvement is possible or a reachable
// tail is infinite.
ExtendedTime expected_time(const TransitionDistribution& trans,
                           std::span<const ExtendedTime> tail_above);

// Smallest rate attaining the row minimum within 1e-12 relative slack.
std::size_t argmin_rate_index(const std::vector<ExtendedTime>& row);

// Recomputes T_star, P_opt and infinite_levels from T and the grid.
void finalize_tables(DpTables& tables);

// Backward sweep from f_max - 1 down to f_min; cells within one level are
// evaluated in parallel across `workers` threads.
DpTables solve(const ProblemModel& problem, const RateGrid& grid, int lambda,
               const TransitionProvider& provider, int workers = 1);

// Provider computing cells with estimate_transitions under per-cell streams
// derived from cfg.seed.
TransitionProvider make_mc_provider(const ProblemModel& problem, int lambda,
                                    const McConfig& cfg);

DpTables solve_mc(const ProblemModel& problem, const RateGrid& grid, int lambda,
                  const McConfig& cfg, int workers = 1);

}  // namespace evodp
