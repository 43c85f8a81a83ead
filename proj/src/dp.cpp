#include "evodp/dp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "evodp/parallel.hpp"

namespace evodp {

RateGrid::RateGrid(int f_min, int f_max, std::vector<double> rates_for_all_levels)
    : f_min_(f_min), f_max_(f_max) {
    rows_.assign(static_cast<std::size_t>(levels()),
                 std::move(rates_for_all_levels));
    validate();
}

RateGrid::RateGrid(int f_min, int f_max, std::vector<std::vector<double>> per_level)
    : f_min_(f_min), f_max_(f_max), rows_(std::move(per_level)) {
    validate();
}

void RateGrid::validate() const {
    if (f_min_ >= f_max_) {
        throw std::invalid_argument("RateGrid: need f_min < f_max");
    }
    if (rows_.size() != static_cast<std::size_t>(levels())) {
        throw std::invalid_argument("RateGrid: one rate row per level below the optimum");
    }
    for (const auto& row : rows_) {
        if (row.empty()) throw std::invalid_argument("RateGrid: empty rate row");
        double prev = 0.0;
        for (double p : row) {
            if (!(p > 0.0 && p <= 1.0)) {
                throw std::invalid_argument("RateGrid: rates must lie in (0, 1]");
            }
            if (p <= prev) {
                throw std::invalid_argument("RateGrid: rates must be strictly increasing");
            }
            prev = p;
        }
    }
}

const std::vector<double>& RateGrid::rates(int fitness) const {
    if (fitness < f_min_ || fitness >= f_max_) {
        throw std::out_of_range("RateGrid::rates: fitness outside [f_min, f_max)");
    }
    return rows_[static_cast<std::size_t>(fitness - f_min_)];
}

RateGrid build_grid(const GridSpec& spec, int f_min, int f_max) {
    std::vector<double> rates;
    for (int i = 0; i < spec.mult_count; ++i) {
        double p = spec.mult_base * std::pow(spec.mult_alpha, static_cast<double>(i));
        // The top of a decade-spanning grid lands on 1 only up to rounding.
        if (p > 1.0 && p < 1.0 + 1e-9) p = 1.0;
        rates.push_back(p);
    }
    for (int i = 0; i < spec.add_count; ++i) {
        rates.push_back(spec.add_base + static_cast<double>(i) * spec.add_step);
    }
    if (rates.empty()) {
        throw std::invalid_argument("build_grid: no rates configured");
    }
    for (double p : rates) {
        if (!(p > 0.0 && p <= 1.0)) {
            throw std::invalid_argument("build_grid: rates must lie in (0, 1]");
        }
    }
    std::sort(rates.begin(), rates.end());
    rates.erase(std::unique(rates.begin(), rates.end()), rates.end());
    return RateGrid(f_min, f_max, std::move(rates));
}

ExtendedTime expected_time(const TransitionDistribution& trans,
                           std::span<const ExtendedTime> tail_above) {
    if (trans.gains.empty()) {
        throw std::invalid_argument("expected_time: empty transition distribution");
    }
    double sum = 0.0;
    for (double g : trans.gains) {
        if (!(g >= 0.0)) {
            throw std::invalid_argument("expected_time: negative gain probability");
        }
        sum += g;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("expected_time: gains are not normalized");
    }
    const double p0 = trans.gains[0];
    if (p0 >= 1.0) return ExtendedTime::infinity();

    ExtendedTime acc(1.0);
    for (std::size_t i = 1; i < trans.gains.size(); ++i) {
        const double gi = trans.gains[i];
        if (gi == 0.0) continue;
        if (i - 1 >= tail_above.size()) {
            throw std::invalid_argument("expected_time: tail shorter than reachable gains");
        }
        const ExtendedTime term = tail_above[i - 1].scaled_by(gi);
        if (!term.finite()) return ExtendedTime::infinity();
        acc += term;
    }
    return acc.scaled_by(1.0 / (1.0 - p0));
}

std::size_t argmin_rate_index(const std::vector<ExtendedTime>& row) {
    if (row.empty()) throw std::invalid_argument("argmin_rate_index: empty row");
    ExtendedTime best = row[0];
    for (const ExtendedTime& t : row) best = std::min(best, t);
    if (!best.finite()) return 0;
    // Equal values within 1e-12 relative slack tie-break to the smallest rate.
    const double cutoff = best.value() * (1.0 + 1e-12);
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j].finite() && row[j].value() <= cutoff) return j;
    }
    return 0;  // unreachable
}

void finalize_tables(DpTables& tables) {
    const int span = tables.f_max - tables.f_min;
    if (static_cast<int>(tables.T.size()) != span) {
        throw std::invalid_argument("finalize_tables: T must have one row per level");
    }
    tables.T_star.assign(static_cast<std::size_t>(span) + 1, ExtendedTime{});
    tables.P_opt.assign(static_cast<std::size_t>(span) + 1, 0.0);
    tables.infinite_levels.clear();
    for (int f = tables.f_max - 1; f >= tables.f_min; --f) {
        const auto& row = tables.T[tables.t_index(f)];
        const std::size_t j = argmin_rate_index(row);
        tables.T_star[tables.t_index(f)] = row[j];
        tables.P_opt[tables.t_index(f)] = tables.grid.rates(f)[j];
        if (!row[j].finite()) tables.infinite_levels.push_back(f);
    }
    std::sort(tables.infinite_levels.begin(), tables.infinite_levels.end());
}

DpTables solve(const ProblemModel& problem, const RateGrid& grid, int lambda,
               const TransitionProvider& provider, int workers) {
    if (grid.f_min() != problem.f_min() || grid.f_max() != problem.f_max()) {
        throw std::invalid_argument("solve: grid range does not match the problem");
    }
    if (lambda < 1) throw std::invalid_argument("solve: lambda must be >= 1");
    if (workers < 1) throw std::invalid_argument("solve: workers must be >= 1");

    DpTables tables;
    tables.f_min = problem.f_min();
    tables.f_max = problem.f_max();
    tables.grid = grid;
    tables.meta.problem = problem.name();
    tables.meta.n = problem.n();
    tables.meta.lambda = lambda;

    const int span = tables.f_max - tables.f_min;
    tables.T.assign(static_cast<std::size_t>(span), {});
    tables.T_star.assign(static_cast<std::size_t>(span) + 1, ExtendedTime{});
    tables.P_opt.assign(static_cast<std::size_t>(span) + 1, 0.0);

    for (int f = tables.f_max - 1; f >= tables.f_min; --f) {
        const auto& rates = grid.rates(f);
        auto& row = tables.T[tables.t_index(f)];
        row.assign(rates.size(), ExtendedTime{});
        const std::span<const ExtendedTime> tail(
            tables.T_star.data() + tables.t_index(f) + 1,
            static_cast<std::size_t>(tables.f_max - f));
        parallel_for(rates.size(), workers, [&](std::size_t j) {
            const TransitionDistribution trans = provider(f, rates[j], j);
            row[j] = expected_time(trans, tail);
        });
        const std::size_t j = argmin_rate_index(row);
        tables.T_star[tables.t_index(f)] = row[j];
        tables.P_opt[tables.t_index(f)] = rates[j];
        if (!row[j].finite()) tables.infinite_levels.push_back(f);
    }
    std::sort(tables.infinite_levels.begin(), tables.infinite_levels.end());
    return tables;
}

TransitionProvider make_mc_provider(const ProblemModel& problem, int lambda,
                                    const McConfig& cfg) {
    return [problem, lambda, cfg](int fitness, double rate,
                                  std::size_t rate_index) {
        Rng rng = transition_stream(cfg.seed, fitness, rate_index);
        return estimate_transitions(problem, fitness, rate, lambda, cfg, rng);
    };
}

DpTables solve_mc(const ProblemModel& problem, const RateGrid& grid, int lambda,
                  const McConfig& cfg, int workers) {
    DpTables tables = solve(problem, grid, lambda,
                            make_mc_provider(problem, lambda, cfg), workers);
    tables.meta.provider = "mc";
    tables.meta.mc = cfg;
    return tables;
}

}  // namespace evodp
