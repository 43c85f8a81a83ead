#include "evodp/logcomb.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace evodp {

LogComb::LogComb(int max_n) {
    if (max_n < 0) throw std::invalid_argument("LogComb: max_n must be >= 0");
    lf_.resize(static_cast<std::size_t>(max_n) + 1);
    lf_[0] = 0.0;
    for (int m = 1; m <= max_n; ++m) {
        lf_[m] = lf_[m - 1] + std::log(static_cast<double>(m));
    }
}

double LogComb::log_factorial(int m) const {
    if (m < 0 || m > max_n()) {
        throw std::out_of_range("LogComb: argument outside cached range");
    }
    return lf_[m];
}

double LogComb::log_choose(int n, int k) const {
    if (n < 0 || n > max_n()) {
        throw std::out_of_range("LogComb: n outside cached range");
    }
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return lf_[n] - lf_[k] - lf_[n - k];
}

double LogComb::choose(int n, int k) const {
    const double lc = log_choose(n, k);
    return lc == -std::numeric_limits<double>::infinity() ? 0.0 : std::exp(lc);
}

double log_binomial_pmf(const LogComb& comb, int n, int k, double p) {
    const double neg_inf = -std::numeric_limits<double>::infinity();
    if (k < 0 || k > n) return neg_inf;
    if (p <= 0.0) return k == 0 ? 0.0 : neg_inf;
    if (p >= 1.0) return k == n ? 0.0 : neg_inf;
    return comb.log_choose(n, k) + k * std::log(p) + (n - k) * std::log1p(-p);
}

}  // namespace evodp
