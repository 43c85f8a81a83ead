#pragma once

#include <vector>

namespace evodp {

/// Cached log-factorials up to a fixed maximum, for log-domain binomial
/// and hypergeometric probabilities. Built once, read-only afterwards,
/// so instances can be shared across threads.
class LogComb {
  public:
    explicit LogComb(int max_n);

    int max_n() const { return static_cast<int>(lf_.size()) - 1; }
    double log_factorial(int m) const;
    double log_choose(int n, int k) const;  // -inf when k outside [0, n]
    double choose(int n, int k) const;

  private:
    std::vector<double> lf_;
};

// log Pr[B(n, p) = k]; exact at the p = 0 and p = 1 edges.
double log_binomial_pmf(const LogComb& comb, int n, int k, double p);

}  // namespace evodp
