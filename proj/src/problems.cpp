#include "evodp/problems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "evodp/logcomb.hpp"

namespace evodp {

namespace {

int count_ones(const Genotype& x) {
    int om = 0;
    for (std::uint8_t b : x) om += b;
    return om;
}

int ruggedness_of_om(int om, int n) {
    if (om == n) return n;
    return om % 2 == n % 2 ? om + 1 : om - 1;
}

}  // namespace

Genotype random_genotype(int n, Rng& rng) {
    if (n <= 0) throw std::invalid_argument("random_genotype: n must be positive");
    Genotype x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        x[i] = static_cast<std::uint8_t>(rng() & 1u);
    }
    return x;
}

int onemax_eval(const Genotype& x) { return count_ones(x); }

int ruggedness_eval(const Genotype& x) {
    const int n = static_cast<int>(x.size());
    if (n % 2 != 0) {
        throw std::invalid_argument("ruggedness_eval: requires even length");
    }
    return ruggedness_of_om(count_ones(x), n);
}

double FitnessDistribution::mass_at(int fitness) const {
    if (fitness < first_fitness || fitness > last_fitness()) return 0.0;
    return mass[static_cast<std::size_t>(fitness - first_fitness)];
}

double FitnessDistribution::total() const {
    double s = 0.0;
    for (double m : mass) s += m;
    return s;
}

ProblemModel ProblemModel::onemax(int n) {
    if (n <= 0) throw std::invalid_argument("onemax: n must be positive");
    ProblemModel p;
    p.name_ = "onemax";
    p.n_ = n;
    p.f_min_ = 0;
    p.f_max_ = n;
    p.om_decomposable_ = true;
    p.om_fitness_.resize(n + 1);
    p.fitness_om_.resize(n + 1);
    for (int om = 0; om <= n; ++om) {
        p.om_fitness_[om] = om;
        p.fitness_om_[om] = om;
    }
    return p;
}

ProblemModel ProblemModel::ruggedness(int n) {
    if (n <= 0) throw std::invalid_argument("ruggedness: n must be positive");
    if (n % 2 != 0) {
        // Odd n would map OM = 0 to fitness -1 and leave a hole at 0,
        // breaking the contiguous attainable range.
        throw std::invalid_argument("ruggedness: n must be even");
    }
    ProblemModel p;
    p.name_ = "ruggedness";
    p.n_ = n;
    p.f_min_ = 0;
    p.f_max_ = n;
    p.om_decomposable_ = true;
    p.om_fitness_.resize(n + 1);
    p.fitness_om_.assign(n + 1, -1);
    for (int om = 0; om <= n; ++om) {
        const int f = ruggedness_of_om(om, n);
        p.om_fitness_[om] = f;
        if (f < 0 || f > n || p.fitness_om_[f] != -1) {
            throw std::logic_error("ruggedness: OM->fitness map is not a bijection");
        }
        p.fitness_om_[f] = om;
    }
    return p;
}

ProblemModel ProblemModel::custom(std::string name, int n, int f_min, int f_max,
                                  std::function<int(const Genotype&)> eval,
                                  std::function<Genotype(int)> representative) {
    if (n <= 0) throw std::invalid_argument("custom problem: n must be positive");
    if (f_min > f_max) {
        throw std::invalid_argument("custom problem: f_min must be <= f_max");
    }
    if (!eval) throw std::invalid_argument("custom problem: eval is required");
    ProblemModel p;
    p.name_ = std::move(name);
    p.n_ = n;
    p.f_min_ = f_min;
    p.f_max_ = f_max;
    p.om_decomposable_ = false;
    p.eval_ = std::move(eval);
    p.representative_ = std::move(representative);
    return p;
}

int ProblemModel::evaluate(const Genotype& x) const {
    if (static_cast<int>(x.size()) != n_) {
        throw std::invalid_argument("evaluate: genotype length mismatch");
    }
    if (!om_decomposable_) return eval_(x);
    return om_fitness_[count_ones(x)];
}

int ProblemModel::om_to_fitness(int om) const {
    if (!om_decomposable_) {
        throw std::logic_error("om_to_fitness: problem is not OM-decomposable");
    }
    if (om < 0 || om > n_) throw std::out_of_range("om_to_fitness: OM outside [0, n]");
    return om_fitness_[om];
}

int ProblemModel::fitness_to_om(int fitness) const {
    if (!om_decomposable_) {
        throw std::logic_error("fitness_to_om: problem is not OM-decomposable");
    }
    if (fitness < f_min_ || fitness > f_max_) {
        throw std::out_of_range("fitness_to_om: fitness outside attainable range");
    }
    return fitness_om_[fitness - f_min_];
}

Genotype ProblemModel::representative(int fitness) const {
    if (fitness < f_min_ || fitness > f_max_) {
        throw std::out_of_range("representative: fitness outside attainable range");
    }
    if (!om_decomposable_) {
        if (!representative_) {
            throw std::logic_error("representative: no callback supplied");
        }
        Genotype x = representative_(fitness);
        if (evaluate(x) != fitness) {
            throw std::runtime_error("representative: callback returned wrong fitness");
        }
        return x;
    }
    const int om = fitness_to_om(fitness);
    Genotype x(static_cast<std::size_t>(n_), 0);
    std::fill_n(x.begin(), om, std::uint8_t{1});
    return x;
}

FitnessDistribution ProblemModel::initial_fitness_distribution() const {
    if (!om_decomposable_) {
        throw std::logic_error(
            "initial_fitness_distribution: exact form needs an OM-decomposable "
            "problem; use estimate_initial_fitness_distribution instead");
    }
    // A uniform random individual has OM ~ Binomial(n, 1/2); push those
    // masses through the OM->fitness map in log domain.
    const LogComb comb(n_);
    const double log_half_n = n_ * std::log(0.5);
    FitnessDistribution dist;
    dist.first_fitness = f_min_;
    dist.mass.assign(static_cast<std::size_t>(f_max_ - f_min_) + 1, 0.0);
    for (int om = 0; om <= n_; ++om) {
        const double m = std::exp(comb.log_choose(n_, om) + log_half_n);
        dist.mass[om_fitness_[om] - f_min_] += m;
    }
    return dist;
}

FitnessDistribution estimate_initial_fitness_distribution(
    const ProblemModel& problem, long long samples, Rng& rng) {
    if (samples <= 0) {
        throw std::invalid_argument("estimate_initial_fitness_distribution: samples must be positive");
    }
    std::vector<long long> counts(
        static_cast<std::size_t>(problem.f_max() - problem.f_min()) + 1, 0);
    for (long long s = 0; s < samples; ++s) {
        const Genotype x = random_genotype(problem.n(), rng);
        const int f = problem.evaluate(x);
        if (f < problem.f_min() || f > problem.f_max()) {
            throw std::runtime_error("estimate_initial_fitness_distribution: fitness outside declared range");
        }
        ++counts[f - problem.f_min()];
    }
    FitnessDistribution dist;
    dist.first_fitness = problem.f_min();
    dist.mass.resize(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        dist.mass[i] = static_cast<double>(counts[i]) / static_cast<double>(samples);
    }
    return dist;
}

}  // namespace evodp
