#pragma once

#include "evodp/dp.hpp"
#include "evodp/montecarlo.hpp"
#include "evodp/problems.hpp"

namespace evodp {

/// Distribution of the OneMax gain when flipping k of n bits while d bits
/// disagree with the optimum. Support lies on gains 2j - k for j flipped
/// disagreeing bits; prob_of_gain is 0 elsewhere.
struct GainLaw {
    int k = 0;
    std::vector<double> prob;  // prob[g + k] for gain g in [-k, k]

    double prob_of_gain(int gain) const {
        if (gain < -k || gain > k) return 0.0;
        return prob[static_cast<std::size_t>(gain + k)];
    }
};

// Hypergeometric gain law: Pr[gain = 2j - k] = C(d,j) C(n-d,k-j) / C(n,k).
GainLaw gain_pmf(int n, int d, int k);

// Exact fitness distribution of one shift-mutation offspring of a parent
// at the given fitness; OM-decomposable problems only.
FitnessDistribution offspring_fitness_pmf(const ProblemModel& problem,
                                          int fitness, double rate);

// Exact one-iteration gain distribution of the (1+lambda) EA: the best-of-
// lambda fitness CDF is the single-offspring CDF raised to lambda, and all
// mass at or below the parent folds into gains[0].
TransitionDistribution transition_exact(const ProblemModel& problem,
                                        int fitness, double rate, int lambda);

TransitionProvider make_exact_provider(const ProblemModel& problem, int lambda);

DpTables solve_exact(const ProblemModel& problem, const RateGrid& grid,
                     int lambda, int workers = 1);

}  // namespace evodp
