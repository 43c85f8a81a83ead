#include <doctest.h>

#include <algorithm>
#include <set>

#include "evodp/problems.hpp"

using namespace evodp;

namespace {

Genotype with_ones(int n, int ones) {
    Genotype x(static_cast<std::size_t>(n), 0);
    std::fill_n(x.begin(), ones, std::uint8_t{1});
    return x;
}

}  // namespace

TEST_CASE("onemax counts agreement with the all-ones optimum") {
    CHECK(onemax_eval({1, 1, 1, 1}) == 4);
    CHECK(onemax_eval({0, 0, 0, 0}) == 0);
    CHECK(onemax_eval({1, 0, 1, 0}) == 2);
}

TEST_CASE("ruggedness swaps adjacent level ranks below the optimum") {
    const int n = 100;
    CHECK(ruggedness_eval(with_ones(n, 100)) == 100);
    CHECK(ruggedness_eval(with_ones(n, 99)) == 98);
    CHECK(ruggedness_eval(with_ones(n, 98)) == 99);
    CHECK(ruggedness_eval(with_ones(n, 97)) == 96);
}

TEST_CASE("ruggedness differs from the OneMax value by at most one") {
    const int n = 12;
    for (int om = 0; om < n; ++om) {
        const int r = ruggedness_eval(with_ones(n, om));
        CHECK(std::abs(r - om) <= 1);
    }
}

TEST_CASE("ruggedness OM-to-fitness map is a bijection on [0, n]") {
    for (int n = 2; n <= 30; n += 2) {
        const ProblemModel problem = ProblemModel::ruggedness(n);
        std::set<int> seen;
        for (int om = 0; om <= n; ++om) {
            const int f = problem.om_to_fitness(om);
            CHECK(f >= 0);
            CHECK(f <= n);
            seen.insert(f);
        }
        CHECK(seen.size() == static_cast<std::size_t>(n + 1));
    }
}

TEST_CASE("ruggedness rejects odd problem sizes") {
    CHECK_THROWS_AS(ProblemModel::ruggedness(7), std::invalid_argument);
    CHECK_THROWS_AS(ruggedness_eval({1, 0, 1}), std::invalid_argument);
}

TEST_CASE("fitness_to_om inverts the fitness map") {
    const ProblemModel onemax = ProblemModel::onemax(100);
    CHECK(onemax.fitness_to_om(37) == 37);

    const ProblemModel rugged = ProblemModel::ruggedness(100);
    CHECK(rugged.fitness_to_om(100) == 100);
    CHECK(rugged.fitness_to_om(99) == 98);
    for (int om = 0; om <= 100; ++om) {
        CHECK(rugged.fitness_to_om(rugged.om_to_fitness(om)) == om);
    }
    CHECK_THROWS_AS(rugged.fitness_to_om(101), std::out_of_range);
    CHECK_THROWS_AS(rugged.fitness_to_om(-1), std::out_of_range);
}

TEST_CASE("representatives attain the requested fitness") {
    const ProblemModel onemax = ProblemModel::onemax(4);
    CHECK(onemax_eval(onemax.representative(2)) == 2);
    CHECK(onemax.representative(4) == Genotype{1, 1, 1, 1});

    const ProblemModel rugged = ProblemModel::ruggedness(4);
    for (int f = rugged.f_min(); f <= rugged.f_max(); ++f) {
        CHECK(rugged.evaluate(rugged.representative(f)) == f);
    }
    CHECK(rugged.representative(rugged.f_max()) == Genotype{1, 1, 1, 1});
    CHECK_THROWS_AS(rugged.representative(5), std::out_of_range);
}

TEST_CASE("initial fitness distribution is the mapped binomial") {
    const ProblemModel onemax = ProblemModel::onemax(2);
    const FitnessDistribution om_dist = onemax.initial_fitness_distribution();
    CHECK(om_dist.mass_at(0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(om_dist.mass_at(1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(om_dist.mass_at(2) == doctest::Approx(0.25).epsilon(1e-12));

    const ProblemModel rugged = ProblemModel::ruggedness(2);
    const FitnessDistribution rugged_dist = rugged.initial_fitness_distribution();
    CHECK(rugged_dist.mass_at(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rugged_dist.mass_at(1) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(rugged_dist.mass_at(2) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("initial fitness masses are normalized and within [0, 1]") {
    for (int n : {1, 2, 10, 51, 100, 400}) {
        const ProblemModel problem = n % 2 == 0 ? ProblemModel::ruggedness(n)
                                                : ProblemModel::onemax(n);
        const FitnessDistribution dist = problem.initial_fitness_distribution();
        CHECK(dist.total() == doctest::Approx(1.0).epsilon(1e-12));
        for (double m : dist.mass) {
            CHECK(m >= 0.0);
            CHECK(m <= 1.0);
        }
    }
}

TEST_CASE("custom problems use callbacks and sampling estimates") {
    // Needle landscape: only the all-ones string scores 1.
    const auto eval = [](const Genotype& x) {
        return static_cast<int>(std::all_of(x.begin(), x.end(),
                                            [](std::uint8_t b) { return b == 1; }));
    };
    const auto repr = [](int fitness) {
        return fitness == 1 ? Genotype{1, 1, 1} : Genotype{0, 1, 0};
    };
    const ProblemModel needle = ProblemModel::custom("needle", 3, 0, 1, eval, repr);
    CHECK_FALSE(needle.om_decomposable());
    CHECK(needle.evaluate({1, 1, 1}) == 1);
    CHECK(needle.evaluate(needle.representative(0)) == 0);
    CHECK_THROWS_AS(needle.initial_fitness_distribution(), std::logic_error);
    CHECK_THROWS_AS(needle.fitness_to_om(0), std::logic_error);

    Rng rng(99);
    const FitnessDistribution est =
        estimate_initial_fitness_distribution(needle, 64000, rng);
    CHECK(est.total() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(est.mass_at(1) == doctest::Approx(1.0 / 8).epsilon(0.15));
}

TEST_CASE("random genotypes have valid entries") {
    Rng rng(5);
    const Genotype x = random_genotype(64, rng);
    CHECK(x.size() == 64);
    for (std::uint8_t b : x) CHECK(b <= 1);
}
