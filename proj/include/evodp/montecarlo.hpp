#pragma once

#include <cstdint>
#include <vector>

#include "evodp/problems.hpp"
#include "evodp/rng.hpp"

namespace evodp {

/// Monte-Carlo budget: at most `iterations` simulated iterations (N_I),
/// stopping early once `successes` strictly improving iterations (N_T)
/// have been observed.
struct McConfig {
    long long iterations = 1'000'000;
    long long successes = 50'000;
    std::uint64_t seed = 1;
};

/// One-iteration fitness-gain distribution of the (1+lambda) EA at a fixed
/// fitness level. gains[i] is the probability of a gain of exactly i;
/// gains[0] absorbs equal and worse outcomes. Entries are counts divided
/// by a common n_actual for estimated distributions, so they sum to 1
/// exactly; n_actual is 0 for analytically computed distributions.
struct TransitionDistribution {
    std::vector<double> gains;
    long long n_actual = 0;
};

// Stream for the grid cell (fitness, rate_index), derived deterministically
// from the root seed so estimates are independent of evaluation order and
// worker count.
Rng transition_stream(std::uint64_t seed, int fitness, std::size_t rate_index);

// Empirical gain distribution at fitness f and rate p: the parent is pinned
// to a representative of f and never updated; each iteration creates lambda
// shift-mutation offspring and records max(f, best offspring fitness).
// Identical (problem, f, p, lambda, cfg, rng state) give bit-identical
// results.
TransitionDistribution estimate_transitions(const ProblemModel& problem,
                                            int fitness, double rate,
                                            int lambda, const McConfig& cfg,
                                            Rng& rng);

}  // namespace evodp
