#include "evodp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "evodp/logcomb.hpp"
#include "evodp/mutation.hpp"

namespace evodp {

namespace {

constexpr double kDropBelow = 1e-300;  // underflow hygiene after the sum check

double pow_int(double base, int exponent) {
    double result = 1.0;
    double b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

void check_normalized(double sum, const char* what) {
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::logic_error(std::string(what) + ": masses do not sum to 1");
    }
}

}  // namespace

GainLaw gain_pmf(int n, int d, int k) {
    if (n < 0 || d < 0 || d > n || k < 0 || k > n) {
        throw std::invalid_argument("gain_pmf: need 0 <= d <= n and 0 <= k <= n");
    }
    const LogComb comb(n);
    GainLaw law;
    law.k = k;
    law.prob.assign(2 * static_cast<std::size_t>(k) + 1, 0.0);
    const double log_total = comb.log_choose(n, k);
    const int j_lo = std::max(0, k - (n - d));
    const int j_hi = std::min(k, d);
    double sum = 0.0;
    for (int j = j_lo; j <= j_hi; ++j) {
        const double mass = std::exp(comb.log_choose(d, j) +
                                     comb.log_choose(n - d, k - j) - log_total);
        law.prob[static_cast<std::size_t>(2 * j - k) + k] = mass;
        sum += mass;
    }
    check_normalized(sum, "gain_pmf");
    return law;
}

FitnessDistribution offspring_fitness_pmf(const ProblemModel& problem,
                                          int fitness, double rate) {
    if (!problem.om_decomposable()) {
        throw std::invalid_argument("offspring_fitness_pmf: needs an OM-decomposable problem");
    }
    if (fitness < problem.f_min() || fitness > problem.f_max()) {
        throw std::out_of_range("offspring_fitness_pmf: fitness outside attainable range");
    }
    const int n = problem.n();
    const int om = problem.fitness_to_om(fitness);
    const int d = n - om;

    const ShiftBinomial flips(n, rate);
    FitnessDistribution dist;
    dist.first_fitness = problem.f_min();
    dist.mass.assign(static_cast<std::size_t>(problem.f_max() - problem.f_min()) + 1,
                     0.0);
    for (int k = 1; k <= n; ++k) {
        const double wk = flips.pmf(k);
        if (wk == 0.0) continue;
        const GainLaw law = gain_pmf(n, d, k);
        const int j_lo = std::max(0, k - (n - d));
        const int j_hi = std::min(k, d);
        for (int j = j_lo; j <= j_hi; ++j) {
            const int gain = 2 * j - k;
            const double mass = wk * law.prob_of_gain(gain);
            const int f = problem.om_to_fitness(om + gain);
            dist.mass[f - problem.f_min()] += mass;
        }
    }
    check_normalized(dist.total(), "offspring_fitness_pmf");
    for (double& m : dist.mass) {
        if (m != 0.0 && m < kDropBelow) m = 0.0;
    }
    return dist;
}

TransitionDistribution transition_exact(const ProblemModel& problem,
                                        int fitness, double rate, int lambda) {
    if (fitness >= problem.f_max()) {
        throw std::invalid_argument("transition_exact: fitness must be below the optimum");
    }
    if (lambda < 1) {
        throw std::invalid_argument("transition_exact: lambda must be >= 1");
    }
    const FitnessDistribution single = offspring_fitness_pmf(problem, fitness, rate);

    // Running CDF over ascending fitness; identical prefixes stay bitwise
    // equal, so structurally impossible gains come out exactly zero.
    std::vector<double> cdf(single.mass.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < single.mass.size(); ++i) {
        acc += single.mass[i];
        cdf[i] = std::min(acc, 1.0);
    }

    const int max_gain = problem.f_max() - fitness;
    TransitionDistribution out;
    out.n_actual = 0;
    out.gains.assign(static_cast<std::size_t>(max_gain) + 1, 0.0);
    double above = 0.0;
    const auto cdf_at = [&](int f) {
        return cdf[static_cast<std::size_t>(f - problem.f_min())];
    };
    for (int i = 1; i <= max_gain; ++i) {
        const double hi = pow_int(cdf_at(fitness + i), lambda);
        const double lo = pow_int(cdf_at(fitness + i - 1), lambda);
        const double mass = std::max(hi - lo, 0.0);
        out.gains[static_cast<std::size_t>(i)] = mass;
        above += mass;
    }
    out.gains[0] = 1.0 - above;
    return out;
}

TransitionProvider make_exact_provider(const ProblemModel& problem, int lambda) {
    return [problem, lambda](int fitness, double rate, std::size_t) {
        return transition_exact(problem, fitness, rate, lambda);
    };
}

DpTables solve_exact(const ProblemModel& problem, const RateGrid& grid,
                     int lambda, int workers) {
    DpTables tables = solve(problem, grid, lambda,
                            make_exact_provider(problem, lambda), workers);
    tables.meta.provider = "exact";
    return tables;
}

}  // namespace evodp
