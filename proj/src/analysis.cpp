#include "evodp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace evodp {

ExtendedTime lower_bound(const DpTables& tables, const FitnessDistribution& init) {
    if (init.first_fitness < tables.f_min || init.last_fitness() > tables.f_max) {
        throw std::invalid_argument(
            "lower_bound: initial distribution support outside the table range");
    }
    ExtendedTime total;
    for (int f = init.first_fitness; f <= init.last_fitness(); ++f) {
        const double mass = init.mass_at(f);
        if (mass < 0.0 || mass > 1.0) {
            throw std::invalid_argument("lower_bound: masses must lie in [0, 1]");
        }
        if (mass == 0.0) continue;
        const ExtendedTime term = tables.T_star[tables.t_index(f)].scaled_by(mass);
        if (!term.finite()) return ExtendedTime::infinity();
        total += term;
    }
    return total;
}

namespace {

// Largest alpha_f <= 1 for which at least half of the finite cells keep
// C >= 0.5: ln 2 over the lower median of the finite deviations.
double row_alpha(const std::vector<ExtendedTime>& row, ExtendedTime t_star) {
    if (!t_star.finite()) return 1.0;
    std::vector<double> deviations;
    deviations.reserve(row.size());
    for (const ExtendedTime& t : row) {
        if (t.finite()) deviations.push_back(t.value() - t_star.value());
    }
    if (deviations.empty()) return 1.0;
    const std::size_t mid = (deviations.size() - 1) / 2;
    std::nth_element(deviations.begin(), deviations.begin() + mid,
                     deviations.end());
    const double d_med = deviations[mid];
    if (d_med <= 0.0) return 1.0;
    return std::min(1.0, std::log(2.0) / d_med);
}

}  // namespace

std::vector<HeatmapCell> heatmap(const DpTables& tables) {
    std::vector<HeatmapCell> cells;
    for (int f = tables.f_min; f < tables.f_max; ++f) {
        const auto& row = tables.T[tables.t_index(f)];
        const auto& rates = tables.grid.rates(f);
        const ExtendedTime t_star = tables.T_star[tables.t_index(f)];
        const double alpha = row_alpha(row, t_star);
        for (std::size_t j = 0; j < row.size(); ++j) {
            HeatmapCell cell;
            cell.fitness = f;
            cell.rate = rates[j];
            cell.alpha_f = alpha;
            cell.T = row[j];
            if (!row[j].finite() || !t_star.finite()) {
                cell.C = 0.0;
            } else {
                cell.C = std::exp(alpha * (t_star.value() - row[j].value()));
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

std::size_t nearest_rate_index(const std::vector<double>& rates, double p) {
    if (rates.empty()) throw std::invalid_argument("nearest_rate_index: no rates");
    if (!(p > 0.0)) throw std::invalid_argument("nearest_rate_index: rate must be positive");
    const double key = std::log(p);
    std::size_t best = 0;
    double best_dist = std::abs(std::log(rates[0]) - key);
    for (std::size_t j = 1; j < rates.size(); ++j) {
        const double dist = std::abs(std::log(rates[j]) - key);
        if (dist < best_dist) {  // ties keep the earlier (smaller) rate
            best = j;
            best_dist = dist;
        }
    }
    return best;
}

std::vector<RegretPoint> regret_trace(const RunTrace& trace,
                                      const DpTables& tables) {
    std::vector<RegretPoint> points;
    points.reserve(trace.records.size());
    for (const TraceRecord& rec : trace.records) {
        if (rec.parent_fitness < tables.f_min ||
            rec.parent_fitness >= tables.f_max) {
            throw std::invalid_argument(
                "regret_trace: trace fitness outside the table range");
        }
        const auto& rates = tables.grid.rates(rec.parent_fitness);
        const std::size_t j = nearest_rate_index(rates, rec.rate);
        const ExtendedTime t = tables.T[tables.t_index(rec.parent_fitness)][j];
        const ExtendedTime t_star = tables.T_star[tables.t_index(rec.parent_fitness)];

        RegretPoint point;
        point.iteration = rec.iteration;
        point.fitness = rec.parent_fitness;
        point.rate = rec.rate;
        point.mapped_rate = rates[j];
        if (!t.finite()) {
            // Both infinite means no cost relative to the (hopeless) optimum.
            point.regret = t_star.finite() ? ExtendedTime::infinity() : ExtendedTime{};
        } else {
            point.regret = ExtendedTime(std::abs(t.value() - t_star.value()));
        }
        points.push_back(point);
    }
    return points;
}

}  // namespace evodp
