#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "evodp/mutation.hpp"
#include "evodp/oracle.hpp"
#include "support/brute_force.hpp"

using namespace evodp;

TEST_CASE("shift pmf moves the k=0 mass onto k=1") {
    CHECK(shift_binomial_pmf(2, 0.5, 1) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(shift_binomial_pmf(2, 0.5, 2) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(shift_binomial_pmf(2, 0.5, 0) == 0.0);
    CHECK(shift_binomial_pmf(17, 0.03, 0) == 0.0);
    CHECK(shift_binomial_pmf(5, 1.0, 5) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("shift pmf rejects bad arguments") {
    CHECK_THROWS_AS(shift_binomial_pmf(4, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(shift_binomial_pmf(4, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(shift_binomial_pmf(4, 0.2, 5), std::out_of_range);
}

TEST_CASE("shift pmf sums to one") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(uniform_below(rng, 200));
        const double p = uniform01(rng);
        const ShiftBinomial dist(n, p);
        double sum = 0.0;
        for (int k = 0; k <= n; ++k) sum += dist.pmf(k);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("shift pmf matches the direct small-n formula") {
    for (int n : {1, 2, 5, 11}) {
        for (double p : {0.0, 0.01, 0.3, 0.77, 1.0}) {
            for (int k = 0; k <= n; ++k) {
                CHECK(shift_binomial_pmf(n, p, k) ==
                      doctest::Approx(testing::shift_pmf_direct(n, k, p))
                          .epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("flip counts at the rate extremes are deterministic") {
    Rng rng(11);
    const ShiftBinomial zero(9, 0.0);
    const ShiftBinomial one(9, 1.0);
    for (int i = 0; i < 100; ++i) {
        CHECK(sample_flip_count(zero, rng) == 1);
        CHECK(sample_flip_count(one, rng) == 9);
    }
}

TEST_CASE("sampled flip counts follow the shift pmf") {
    const int n = 12;
    const double p = 0.17;
    const ShiftBinomial dist(n, p);
    Rng rng(2024);
    const int draws = 1'000'000;
    std::vector<int> counts(n + 1, 0);
    for (int i = 0; i < draws; ++i) ++counts[dist.sample(rng)];
    CHECK(counts[0] == 0);
    for (int k = 0; k <= n; ++k) {
        const double expect = dist.pmf(k);
        const double se = std::sqrt(expect * (1.0 - expect) / draws);
        const double observed = static_cast<double>(counts[k]) / draws;
        CHECK(std::abs(observed - expect) <= 3.0 * se + 1e-9);
    }
}

TEST_CASE("binomial sampling stays exact when (1-p)^n underflows") {
    // n log1p(-p) < -700 forces the recursive split path.
    const int n = 4000;
    const double p = 0.5;
    Rng rng(31);
    const int draws = 200'000;
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < draws; ++i) {
        const double k = sample_binomial(n, p, rng);
        sum += k;
        sq += k * k;
    }
    const double mean = sum / draws;
    const double var = sq / draws - mean * mean;
    const double expect_mean = n * p;
    const double expect_var = n * p * (1.0 - p);
    CHECK(std::abs(mean - expect_mean) <=
          4.0 * std::sqrt(expect_var / draws));
    CHECK(std::abs(var - expect_var) <= 0.05 * expect_var);
}

TEST_CASE("flip_k_bits changes exactly k positions") {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(uniform_below(rng, 60));
        const int k = static_cast<int>(uniform_below(rng, n + 1));
        const Genotype x = random_genotype(n, rng);
        const Genotype y = flip_k_bits(x, k, rng);
        int hamming = 0;
        for (int i = 0; i < n; ++i) hamming += x[i] != y[i];
        CHECK(hamming == k);
    }
}

TEST_CASE("flip_k_bits edge cases") {
    Rng rng(4);
    const Genotype x{1, 0, 1, 1, 0};
    CHECK(flip_k_bits(x, 0, rng) == x);
    CHECK(flip_k_bits(x, 5, rng) == Genotype{0, 1, 0, 0, 1});
    CHECK_THROWS_AS(flip_k_bits(x, 6, rng), std::invalid_argument);
    CHECK_THROWS_AS(flip_k_bits(x, -1, rng), std::invalid_argument);
}

TEST_CASE("single-bit flips are uniform over positions") {
    Rng rng(17);
    const Genotype x{1, 1, 1};
    std::map<Genotype, int> counts;
    const int draws = 100'000;
    for (int i = 0; i < draws; ++i) ++counts[flip_k_bits(x, 1, rng)];
    CHECK(counts.size() == 3);
    const double se = std::sqrt((1.0 / 3) * (2.0 / 3) / draws);
    for (const auto& [y, c] : counts) {
        CHECK(std::abs(static_cast<double>(c) / draws - 1.0 / 3) <= 3.0 * se);
    }
}

TEST_CASE("k-subset sampler yields distinct in-range positions") {
    Rng rng(23);
    KSubsetSampler sampler(40);
    std::vector<int> positions;
    for (int trial = 0; trial < 200; ++trial) {
        const int k = static_cast<int>(uniform_below(rng, 41));
        sampler.sample(k, rng, positions);
        std::set<int> unique(positions.begin(), positions.end());
        CHECK(unique.size() == static_cast<std::size_t>(k));
        for (int pos : positions) {
            CHECK(pos >= 0);
            CHECK(pos < 40);
        }
    }
}

TEST_CASE("OM gain of a k-flip follows the hypergeometric law") {
    const int n = 10;
    const int om = 6;
    const int d = n - om;
    Genotype x(n, 0);
    std::fill_n(x.begin(), om, std::uint8_t{1});

    Rng rng(401);
    for (int k : {1, 2, 3, 7}) {
        const GainLaw law = gain_pmf(n, d, k);
        const int draws = 200'000;
        std::map<int, int> counts;
        for (int i = 0; i < draws; ++i) {
            const Genotype y = flip_k_bits(x, k, rng);
            ++counts[onemax_eval(y) - om];
        }
        for (int gain = -k; gain <= k; ++gain) {
            const double expect = law.prob_of_gain(gain);
            const double se = std::sqrt(expect * (1.0 - expect) / draws);
            const double observed =
                counts.count(gain) ? static_cast<double>(counts[gain]) / draws : 0.0;
            CHECK(std::abs(observed - expect) <= 4.0 * se + 1e-9);
        }
    }
}
