#include "evodp/mutation.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "evodp/logcomb.hpp"

namespace evodp {

namespace {

void check_rate(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("mutation rate must be in [0, 1]");
    }
}

// Inversion sampler; requires p <= 1/2 and a representable (1-p)^n.
int sample_binomial_inversion(int n, double p, Rng& rng) {
    const double odds = p / (1.0 - p);
    double pmf = std::exp(n * std::log1p(-p));
    double u = uniform01(rng);
    int k = 0;
    while (u > pmf && k < n) {
        u -= pmf;
        ++k;
        pmf *= odds * static_cast<double>(n - k + 1) / static_cast<double>(k);
    }
    return k;
}

}  // namespace

int sample_binomial(int n, double p, Rng& rng) {
    if (n < 0) throw std::invalid_argument("sample_binomial: n must be >= 0");
    check_rate(p);
    if (n == 0 || p == 0.0) return 0;
    if (p == 1.0) return n;
    if (p > 0.5) return n - sample_binomial(n, 1.0 - p, rng);
    if (n * std::log1p(-p) < -700.0) {
        // (1-p)^n underflows; a sum of two independent halves is exact.
        const int half = n / 2;
        return sample_binomial(half, p, rng) + sample_binomial(n - half, p, rng);
    }
    return sample_binomial_inversion(n, p, rng);
}

ShiftBinomial::ShiftBinomial(int n, double p) : n_(n), p_(p) {
    if (n <= 0) throw std::invalid_argument("ShiftBinomial: n must be positive");
    check_rate(p);
}

double ShiftBinomial::pmf(int k) const {
    if (k < 0 || k > n_) {
        throw std::out_of_range("ShiftBinomial::pmf: k outside [0, n]");
    }
    if (k == 0) return 0.0;
    static thread_local LogComb comb(0);
    if (comb.max_n() < n_) comb = LogComb(n_);
    const double mass = std::exp(log_binomial_pmf(comb, n_, k, p_));
    if (k == 1) {
        return mass + std::exp(log_binomial_pmf(comb, n_, 0, p_));
    }
    return mass;
}

int ShiftBinomial::sample(Rng& rng) const {
    const int k = sample_binomial(n_, p_, rng);
    return k == 0 ? 1 : k;
}

double shift_binomial_pmf(int n, double p, int k) {
    return ShiftBinomial(n, p).pmf(k);
}

int sample_flip_count(const ShiftBinomial& dist, Rng& rng) {
    return dist.sample(rng);
}

KSubsetSampler::KSubsetSampler(int n) {
    if (n <= 0) throw std::invalid_argument("KSubsetSampler: n must be positive");
    index_.resize(static_cast<std::size_t>(n));
    std::iota(index_.begin(), index_.end(), 0);
}

void KSubsetSampler::sample(int k, Rng& rng, std::vector<int>& out) {
    const int n = static_cast<int>(index_.size());
    if (k < 0 || k > n) {
        throw std::invalid_argument("KSubsetSampler: k outside [0, n]");
    }
    out.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const auto j = i + static_cast<int>(uniform_below(
                               rng, static_cast<std::uint64_t>(n - i)));
        std::swap(index_[i], index_[j]);
        out[i] = index_[i];
    }
}

Genotype flip_k_bits(const Genotype& x, int k, Rng& rng) {
    const int n = static_cast<int>(x.size());
    if (k < 0 || k > n) {
        throw std::invalid_argument("flip_k_bits: k outside [0, n]");
    }
    Genotype y = x;
    if (k == 0) return y;
    KSubsetSampler sampler(n);
    std::vector<int> positions;
    sampler.sample(k, rng, positions);
    for (int pos : positions) y[pos] ^= 1u;
    return y;
}

}  // namespace evodp
