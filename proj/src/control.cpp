#include "evodp/control.hpp"

#include <algorithm>
#include <stdexcept>

#include "evodp/mutation.hpp"

namespace evodp {

ControlPolicy::ControlPolicy(Kind kind, double p, double p_min, double p_max,
                             bool clamp_offspring)
    : kind_(kind),
      p_(p),
      p_min_(p_min),
      p_max_(p_max),
      clamp_offspring_(clamp_offspring) {
    if (!(p_min_ > 0.0 && p_min_ <= p_max_ && p_max_ <= 1.0)) {
        throw std::invalid_argument("ControlPolicy: need 0 < p_min <= p_max <= 1");
    }
    if (!(p_ > 0.0 && p_ <= 1.0)) {
        throw std::invalid_argument("ControlPolicy: initial rate must be in (0, 1]");
    }
    p_ = clamped(p_);
}

ControlPolicy ControlPolicy::static_rate(double p) {
    return ControlPolicy(Kind::Static, p, p, p, false);
}

ControlPolicy ControlPolicy::ab_rule(double p_init, double p_min, double p_max) {
    return ControlPolicy(Kind::AbRule, p_init, p_min, p_max, false);
}

ControlPolicy ControlPolicy::two_rate(double p_init, double p_min, double p_max,
                                      bool clamp_offspring) {
    return ControlPolicy(Kind::TwoRate, p_init, p_min, p_max, clamp_offspring);
}

double ControlPolicy::clamped(double p) const {
    return std::clamp(p, p_min_, p_max_);
}

double ControlPolicy::offspring_rate(int index, int lambda) const {
    if (index < 0 || index >= lambda) {
        throw std::out_of_range("offspring_rate: index outside [0, lambda)");
    }
    if (kind_ != Kind::TwoRate) return p_;
    const double raw = index < lambda / 2 ? p_ / 2.0 : 2.0 * p_;
    if (!clamp_offspring_) return std::min(raw, 1.0);
    return clamped(raw);
}

void ControlPolicy::update(int parent_fitness, int best_first_half,
                           int best_second_half, Rng& rng) {
    switch (kind_) {
        case Kind::Static:
            return;
        case Kind::AbRule: {
            const int best = std::max(best_first_half, best_second_half);
            p_ = clamped(best >= parent_fitness ? 2.0 * p_ : p_ / 2.0);
            return;
        }
        case Kind::TwoRate: {
            bool halve;
            if (best_first_half > best_second_half) {
                halve = uniform01(rng) < 0.75;
            } else if (best_second_half > best_first_half) {
                halve = uniform01(rng) >= 0.75;
            } else {
                halve = uniform01(rng) < 0.5;
            }
            p_ = clamped(halve ? p_ / 2.0 : 2.0 * p_);
            return;
        }
    }
}

RunTrace run_ea(const ProblemModel& problem, int lambda, ControlPolicy policy,
                long long budget, Rng& rng, std::optional<int> start_fitness) {
    if (lambda < 1) throw std::invalid_argument("run_ea: lambda must be >= 1");
    if (budget < 1) throw std::invalid_argument("run_ea: budget must be >= 1");
    if (policy.kind() == ControlPolicy::Kind::TwoRate && lambda % 2 != 0) {
        throw std::invalid_argument("run_ea: the two-rate rule needs even lambda");
    }

    const int n = problem.n();
    Genotype parent = start_fitness ? problem.representative(*start_fitness)
                                    : random_genotype(n, rng);
    int parent_fitness = problem.evaluate(parent);

    RunTrace trace;
    if (parent_fitness == problem.f_max()) {
        trace.reached_optimum = true;
        return trace;
    }

    KSubsetSampler subset(n);
    std::vector<int> positions;
    Genotype offspring = parent;
    Genotype selected;

    const bool split_halves = policy.kind() == ControlPolicy::Kind::TwoRate;

    for (long long t = 1; t <= budget; ++t) {
        int best = problem.f_min() - 1;
        int best_first_half = problem.f_min() - 1;
        int best_second_half = problem.f_min() - 1;
        int best_count = 0;
        for (int i = 0; i < lambda; ++i) {
            const double rate = policy.offspring_rate(i, lambda);
            const int k = ShiftBinomial(n, rate).sample(rng);
            subset.sample(k, rng, positions);
            for (int pos : positions) offspring[pos] ^= 1u;
            const int f = problem.evaluate(offspring);
            // Uniform choice among the best offspring via reservoir counting.
            if (f > best) {
                best = f;
                best_count = 1;
                selected = offspring;
            } else if (f == best) {
                ++best_count;
                if (uniform_below(rng, static_cast<std::uint64_t>(best_count)) == 0) {
                    selected = offspring;
                }
            }
            if (split_halves) {
                auto& half_best =
                    i < lambda / 2 ? best_first_half : best_second_half;
                half_best = std::max(half_best, f);
            }
            for (int pos : positions) offspring[pos] ^= 1u;
        }

        trace.records.push_back(TraceRecord{t, parent_fitness, policy.rate(), best,
                                            best > parent_fitness});
        const int parent_before = parent_fitness;
        if (best >= parent_before) {
            parent = selected;
            offspring = parent;
            parent_fitness = best;
        }
        policy.update(parent_before,
                      split_halves ? best_first_half : best,
                      split_halves ? best_second_half : best, rng);

        trace.iterations = t;
        if (parent_fitness == problem.f_max()) {
            trace.reached_optimum = true;
            break;
        }
    }
    return trace;
}

}  // namespace evodp
