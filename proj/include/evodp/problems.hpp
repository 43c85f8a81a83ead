#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "evodp/rng.hpp"

namespace evodp {

/// Fixed-length bit string; every entry is 0 or 1.
using Genotype = std::vector<std::uint8_t>;

Genotype random_genotype(int n, Rng& rng);

// Agreement with the hidden optimum, fixed to the all-ones string.
int onemax_eval(const Genotype& x);

// Concatenated-jump transform of the OneMax value: the optimum keeps
// fitness n while adjacent levels below it swap ranks pairwise, so runs
// must alternate one- and two-bit improvements. Requires even n.
int ruggedness_eval(const Genotype& x);

/// Fitness masses over a contiguous integer fitness range.
struct FitnessDistribution {
    int first_fitness = 0;
    std::vector<double> mass;  // mass[i] is the mass at first_fitness + i

    int last_fitness() const {
        return first_fitness + static_cast<int>(mass.size()) - 1;
    }
    double mass_at(int fitness) const;
    double total() const;
};

/// A fitness landscape exposed through fitness-level semantics: evaluation,
/// the attainable fitness range, a representative individual per level, and
/// the fitness distribution of a uniform random individual.
///
/// For OM-decomposable problems (fitness is a function of the OneMax value
/// alone) the level metadata is exact; custom problems supply callbacks and
/// only support the sampling-based initial distribution estimate.
class ProblemModel {
  public:
    static ProblemModel onemax(int n);
    static ProblemModel ruggedness(int n);  // even n only
    static ProblemModel custom(std::string name, int n, int f_min, int f_max,
                               std::function<int(const Genotype&)> eval,
                               std::function<Genotype(int)> representative);

    const std::string& name() const { return name_; }
    int n() const { return n_; }
    int f_min() const { return f_min_; }
    int f_max() const { return f_max_; }
    bool om_decomposable() const { return om_decomposable_; }

    int evaluate(const Genotype& x) const;

    // OM-decomposable problems only.
    int om_to_fitness(int om) const;
    int fitness_to_om(int fitness) const;

    Genotype representative(int fitness) const;

    // Exact distribution of the fitness of a uniform random individual;
    // requires an OM-decomposable problem.
    FitnessDistribution initial_fitness_distribution() const;

  private:
    ProblemModel() = default;

    std::string name_;
    int n_ = 0;
    int f_min_ = 0;
    int f_max_ = 0;
    bool om_decomposable_ = false;
    std::vector<int> om_fitness_;   // fitness per OM value, size n + 1
    std::vector<int> fitness_om_;   // inverse map, indexed by f - f_min
    std::function<int(const Genotype&)> eval_;
    std::function<Genotype(int)> representative_;
};

// Monte-Carlo fallback for problems without an exact initial distribution.
FitnessDistribution estimate_initial_fitness_distribution(
    const ProblemModel& problem, long long samples, Rng& rng);

}  // namespace evodp
