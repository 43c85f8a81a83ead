#pragma once

// Enumeration-based oracles, implemented independently of the library's
// log-domain kernels: plain double binomial coefficients and explicit
// iteration over bit masks and offspring tuples. Only usable for small n.

#include <cmath>
#include <map>
#include <vector>

#include "evodp/problems.hpp"

namespace evodp::testing {

inline double choose_direct(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double c = 1.0;
    for (int i = 0; i < k; ++i) {
        c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
    return c;
}

inline double binomial_pmf_direct(int n, int k, double p) {
    if (k < 0 || k > n) return 0.0;
    return choose_direct(n, k) * std::pow(p, k) * std::pow(1.0 - p, n - k);
}

inline double shift_pmf_direct(int n, int k, double p) {
    if (k == 0) return 0.0;
    double mass = binomial_pmf_direct(n, k, p);
    if (k == 1) mass += binomial_pmf_direct(n, 0, p);
    return mass;
}

// Gain -> probability for flipping exactly k of n bits with d disagreeing,
// by enumerating every k-subset as a bit mask.
inline std::map<int, double> enumerate_gain_pmf(int n, int d, int k) {
    std::map<int, double> pmf;
    const double total = choose_direct(n, k);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        // Positions [0, d) disagree with the optimum.
        const int flipped_wrong = __builtin_popcount(mask & ((1u << d) - 1u));
        const int gain = 2 * flipped_wrong - k;
        pmf[gain] += 1.0 / total;
    }
    if (k == 0) pmf[0] = 1.0;
    return pmf;
}

// Exact fitness distribution of one shift-mutation offspring by enumerating
// every mutation mask.
inline std::map<int, double> enumerate_offspring_pmf(const ProblemModel& problem,
                                                     int fitness, double rate) {
    const int n = problem.n();
    const Genotype parent = problem.representative(fitness);
    std::map<int, double> pmf;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const int k = __builtin_popcount(mask);
        const double weight =
            shift_pmf_direct(n, k, rate) / choose_direct(n, k);
        if (weight == 0.0) continue;
        Genotype child = parent;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) child[i] ^= 1u;
        }
        pmf[problem.evaluate(child)] += weight;
    }
    return pmf;
}

// One-iteration gain distribution of the (1+lambda) EA by enumerating every
// lambda-tuple of offspring fitness outcomes.
inline std::vector<double> enumerate_transition(const ProblemModel& problem,
                                                int fitness, double rate,
                                                int lambda) {
    const std::map<int, double> single =
        enumerate_offspring_pmf(problem, fitness, rate);
    std::vector<std::pair<int, double>> outcomes(single.begin(), single.end());

    std::vector<double> gains(
        static_cast<std::size_t>(problem.f_max() - fitness) + 1, 0.0);
    std::vector<std::size_t> pick(static_cast<std::size_t>(lambda), 0);
    for (;;) {
        double prob = 1.0;
        int best = outcomes[pick[0]].first;
        for (int i = 0; i < lambda; ++i) {
            prob *= outcomes[pick[i]].second;
            best = std::max(best, outcomes[pick[i]].first);
        }
        const int gain = std::max(0, best - fitness);
        gains[static_cast<std::size_t>(gain)] += prob;

        int pos = lambda - 1;
        while (pos >= 0 && ++pick[pos] == outcomes.size()) {
            pick[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return gains;
}

}  // namespace evodp::testing
