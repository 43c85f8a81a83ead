#include "evodp/montecarlo.hpp"

#include <stdexcept>

#include "evodp/mutation.hpp"

namespace evodp {

Rng transition_stream(std::uint64_t seed, int fitness, std::size_t rate_index) {
    return make_stream(seed, {0x7261746573ULL, static_cast<std::uint64_t>(fitness),
                              static_cast<std::uint64_t>(rate_index)});
}

TransitionDistribution estimate_transitions(const ProblemModel& problem,
                                            int fitness, double rate,
                                            int lambda, const McConfig& cfg,
                                            Rng& rng) {
    if (fitness < problem.f_min() || fitness >= problem.f_max()) {
        throw std::invalid_argument(
            "estimate_transitions: fitness must be below the optimum");
    }
    if (lambda < 1) {
        throw std::invalid_argument("estimate_transitions: lambda must be >= 1");
    }
    if (cfg.iterations < 1 || cfg.successes < 1 || cfg.successes > cfg.iterations) {
        throw std::invalid_argument(
            "estimate_transitions: need 1 <= successes <= iterations");
    }

    const Genotype parent = problem.representative(fitness);
    const int n = problem.n();
    const int max_gain = problem.f_max() - fitness;

    const ShiftBinomial flips(n, rate);
    KSubsetSampler subset(n);
    std::vector<int> positions;
    Genotype scratch = parent;

    std::vector<long long> counts(static_cast<std::size_t>(max_gain) + 1, 0);
    long long executed = 0;
    long long successes = 0;

    for (long long iter = 1; iter <= cfg.iterations; ++iter) {
        int best = fitness;
        for (int i = 0; i < lambda; ++i) {
            const int k = flips.sample(rng);
            subset.sample(k, rng, positions);
            for (int pos : positions) scratch[pos] ^= 1u;
            const int f = problem.evaluate(scratch);
            for (int pos : positions) scratch[pos] ^= 1u;
            if (f > best) best = f;
        }
        const int gain = best - fitness;
        if (gain > max_gain) {
            throw std::runtime_error(
                "estimate_transitions: offspring fitness exceeded the declared optimum");
        }
        ++counts[gain];
        executed = iter;
        if (gain > 0 && ++successes == cfg.successes) break;
    }

    TransitionDistribution out;
    out.n_actual = executed;
    out.gains.resize(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        out.gains[i] = static_cast<double>(counts[i]) / static_cast<double>(executed);
    }
    return out;
}

}  // namespace evodp
