#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "evodp/problems.hpp"
#include "evodp/rng.hpp"

namespace evodp {

/// Stateful mutation-rate rule. The controlled rate p is clamped to
/// [p_min, p_max] after every update; the two-rate rule samples half the
/// offspring at p/2 and half at 2p, with those derived rates left
/// unclamped unless clamp_offspring is set.
class ControlPolicy {
  public:
    enum class Kind { Static, AbRule, TwoRate };

    static ControlPolicy static_rate(double p);
    static ControlPolicy ab_rule(double p_init, double p_min, double p_max);
    static ControlPolicy two_rate(double p_init, double p_min, double p_max,
                                  bool clamp_offspring = false);

    Kind kind() const { return kind_; }
    double rate() const { return p_; }
    double p_min() const { return p_min_; }
    double p_max() const { return p_max_; }

    // Rate used for offspring `index` out of `lambda` this iteration.
    double offspring_rate(int index, int lambda) const;

    // Feedback after selection. For the two-rate rule the two half-bests
    // drive the randomized update; the other rules use the overall best
    // (pass it in both slots).
    void update(int parent_fitness, int best_first_half, int best_second_half,
                Rng& rng);

  private:
    ControlPolicy(Kind kind, double p, double p_min, double p_max,
                  bool clamp_offspring);
    double clamped(double p) const;

    Kind kind_;
    double p_;
    double p_min_;
    double p_max_;
    bool clamp_offspring_;
};

struct TraceRecord {
    long long iteration = 0;    // 1-based
    int parent_fitness = 0;     // before selection
    double rate = 0.0;          // controlled rate p used this iteration
    int best_offspring_fitness = 0;
    bool success = false;       // strict fitness improvement
};

/// Per-iteration record of one EA run plus its terminal status.
struct RunTrace {
    std::vector<TraceRecord> records;
    bool reached_optimum = false;
    long long iterations = 0;  // iterations executed (== hitting time if reached)
};

// One run of the (1+lambda) EA: uniform random initial parent (or a
// representative of start_fitness), shift mutation at the policy's rates,
// elitist selection with uniform tie-breaking among the best offspring.
// Stops when the optimum is sampled or the budget is exhausted.
RunTrace run_ea(const ProblemModel& problem, int lambda, ControlPolicy policy,
                long long budget, Rng& rng,
                std::optional<int> start_fitness = std::nullopt);

}  // namespace evodp
