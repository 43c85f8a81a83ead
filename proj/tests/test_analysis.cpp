#include <doctest.h>

#include <cmath>

#include "evodp/analysis.hpp"
#include "evodp/oracle.hpp"

using namespace evodp;

namespace {

// Hand-built two-level tables: T(0, .) = {2, 5}, optimum at fitness 1.
DpTables toy_tables() {
    DpTables tables;
    tables.f_min = 0;
    tables.f_max = 1;
    tables.grid = RateGrid(0, 1, {0.1, 0.4});
    tables.T = {{ExtendedTime(2.0), ExtendedTime(5.0)}};
    finalize_tables(tables);
    return tables;
}

}  // namespace

TEST_CASE("lower bound of a degenerate start at the optimum is zero") {
    const DpTables tables = toy_tables();
    FitnessDistribution init;
    init.first_fitness = 1;
    init.mass = {1.0};
    CHECK(lower_bound(tables, init).value() == 0.0);
}

TEST_CASE("lower bound averages optimal times over the start distribution") {
    const DpTables tables = toy_tables();
    FitnessDistribution init;
    init.first_fitness = 0;
    init.mass = {0.5, 0.5};
    CHECK(lower_bound(tables, init).value() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("lower bound turns infinite only with positive mass on a dead level") {
    DpTables tables = toy_tables();
    tables.T = {{ExtendedTime::infinity(), ExtendedTime::infinity()}};
    finalize_tables(tables);
    FitnessDistribution init;
    init.first_fitness = 0;
    init.mass = {0.5, 0.5};
    CHECK_FALSE(lower_bound(tables, init).finite());
    init.mass = {0.0, 1.0};
    CHECK(lower_bound(tables, init).value() == 0.0);
}

TEST_CASE("lower bound rejects support outside the table range") {
    const DpTables tables = toy_tables();
    FitnessDistribution init;
    init.first_fitness = -1;
    init.mass = {0.5, 0.5};
    CHECK_THROWS_AS(lower_bound(tables, init), std::invalid_argument);
}

TEST_CASE("lower bound matches a wide-accumulator recomputation") {
    const ProblemModel problem = ProblemModel::onemax(20);
    GridSpec spec;
    spec.mult_base = 1e-3;
    spec.mult_count = 60;
    const RateGrid grid = build_grid(spec, 0, 20);
    const DpTables tables = solve_exact(problem, grid, 8);
    const FitnessDistribution init = problem.initial_fitness_distribution();
    const ExtendedTime bound = lower_bound(tables, init);

    long double reference = 0.0L;
    for (int f = 0; f <= 20; ++f) {
        reference += static_cast<long double>(tables.T_star[f].value()) *
                     static_cast<long double>(init.mass_at(f));
    }
    CHECK(bound.value() ==
          doctest::Approx(static_cast<double>(reference)).epsilon(1e-12));
}

TEST_CASE("heatmap scores the row optimum at exactly one") {
    const DpTables tables = toy_tables();
    const auto cells = heatmap(tables);
    REQUIRE(cells.size() == 2);
    CHECK(cells[0].C == 1.0);
    CHECK(cells[0].alpha_f == cells[1].alpha_f);
    // Lower-median deviation is 0 here, so alpha stays 1 and the worse
    // cell decays as exp(-3); half the row still scores at least 0.5.
    CHECK(cells[1].C == doctest::Approx(std::exp(-3.0)).epsilon(1e-12));
}

TEST_CASE("flat heatmap rows keep full alpha and unit scores") {
    DpTables tables;
    tables.f_min = 0;
    tables.f_max = 1;
    tables.grid = RateGrid(0, 1, {0.1, 0.2, 0.3});
    tables.T = {{ExtendedTime(7.0), ExtendedTime(7.0), ExtendedTime(7.0)}};
    finalize_tables(tables);
    for (const HeatmapCell& cell : heatmap(tables)) {
        CHECK(cell.alpha_f == 1.0);
        CHECK(cell.C == 1.0);
    }
}

TEST_CASE("infinite cells score zero") {
    DpTables tables;
    tables.f_min = 0;
    tables.f_max = 1;
    tables.grid = RateGrid(0, 1, {0.1, 0.2});
    tables.T = {{ExtendedTime(3.0), ExtendedTime::infinity()}};
    finalize_tables(tables);
    const auto cells = heatmap(tables);
    CHECK(cells[0].C == 1.0);
    CHECK(cells[1].C == 0.0);
}

TEST_CASE("at least half of every synthetic row scores at least one half") {
    Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 3 + uniform_below(rng, 50);
        std::vector<double> rates;
        for (std::size_t j = 0; j < m; ++j) {
            rates.push_back(static_cast<double>(j + 1) / static_cast<double>(m));
        }
        std::vector<ExtendedTime> row;
        for (std::size_t j = 0; j < m; ++j) {
            row.emplace_back(10.0 + 1000.0 * uniform01(rng) *
                                        uniform01(rng));
        }
        DpTables tables;
        tables.f_min = 0;
        tables.f_max = 1;
        tables.grid = RateGrid(0, 1, rates);
        tables.T = {row};
        finalize_tables(tables);
        const auto cells = heatmap(tables);
        std::size_t good = 0;
        for (const HeatmapCell& cell : cells) good += cell.C >= 0.5;
        CHECK(good * 2 >= cells.size());
    }
}

TEST_CASE("rates map to the nearest grid cell in log space") {
    const std::vector<double> rates{0.001, 0.01, 0.1, 1.0};
    CHECK(nearest_rate_index(rates, 0.01) == 1);      // exact match
    CHECK(nearest_rate_index(rates, 0.02) == 1);      // below the geometric mean
    CHECK(nearest_rate_index(rates, 0.04) == 2);      // above it
    CHECK(nearest_rate_index(rates, 1e-9) == 0);      // clamped to the ends
    CHECK(nearest_rate_index(rates, 1.0) == 3);
    const double tie = std::sqrt(0.001 * 0.01);       // equidistant in log space
    CHECK(nearest_rate_index(rates, tie) == 0);       // ties take the smaller
}

TEST_CASE("regret is zero exactly on optimal cells and infinite on dead ones") {
    DpTables tables;
    tables.f_min = 0;
    tables.f_max = 2;
    tables.grid = RateGrid(0, 2, {0.1, 0.4});
    tables.T = {{ExtendedTime(4.0), ExtendedTime(9.0)},
                {ExtendedTime(1.5), ExtendedTime::infinity()}};
    finalize_tables(tables);

    RunTrace trace;
    trace.records = {
        {1, 0, 0.1, 0, false},   // optimal cell
        {2, 0, 0.4, 1, true},    // 5 worse than optimal
        {3, 1, 0.5, 1, false},   // maps to the infinite cell
        {4, 1, 0.1, 2, true},
    };
    const auto points = regret_trace(trace, tables);
    REQUIRE(points.size() == 4);
    CHECK(points[0].regret.value() == 0.0);
    CHECK(points[1].regret.value() == doctest::Approx(5.0).epsilon(1e-12));
    CHECK_FALSE(points[2].regret.finite());
    CHECK(points[2].mapped_rate == 0.4);
    CHECK(points[3].regret.value() == 0.0);
    CHECK(points[3].fitness == 1);
}

TEST_CASE("regret rejects trace fitness outside the tables") {
    const DpTables tables = toy_tables();
    RunTrace trace;
    trace.records = {{1, 5, 0.1, 5, false}};
    CHECK_THROWS_AS(regret_trace(trace, tables), std::invalid_argument);
}
