#pragma once

#include <vector>

#include "evodp/control.hpp"
#include "evodp/dp.hpp"

namespace evodp {

/// Relative efficiency of one (fitness, rate) cell:
/// C = exp(alpha_f * (T_star - T)), so the row optimum scores exactly 1 and
/// infinite cells score 0. alpha_f is scaled per row so at least half of
/// the finite cells keep C >= 0.5.
struct HeatmapCell {
    int fitness = 0;
    double rate = 0.0;
    double C = 0.0;
    double alpha_f = 1.0;
    ExtendedTime T;
};

/// Per-iteration cost of the rate actually chosen: |T[f, cell(p)] - T_star[f]|
/// for the grid cell nearest to p in log space.
struct RegretPoint {
    long long iteration = 0;
    int fitness = 0;
    double rate = 0.0;
    double mapped_rate = 0.0;
    ExtendedTime regret;
};

// Expected runtime of the grid-optimal fitness-dependent policy from a
// random start: sum over f of T_star[f] * init.mass_at(f). Infinite when
// any positive-mass level has infinite T_star.
ExtendedTime lower_bound(const DpTables& tables, const FitnessDistribution& init);

// One cell per (fitness below the optimum, grid rate), row-major.
std::vector<HeatmapCell> heatmap(const DpTables& tables);

// Index of the grid rate nearest to p in log space; ties take the smaller.
std::size_t nearest_rate_index(const std::vector<double>& rates, double p);

// One point per recorded iteration of the trace.
std::vector<RegretPoint> regret_trace(const RunTrace& trace,
                                      const DpTables& tables);

}  // namespace evodp
