#pragma once

#include <vector>

#include "evodp/problems.hpp"
#include "evodp/rng.hpp"

namespace evodp {

// Exact Binomial(n, p) sample. Inversion on the smaller of p and 1 - p;
// splits n recursively when (1-p)^n underflows, so it stays exact for
// any n without leaving pure floating-point arithmetic.
int sample_binomial(int n, double p, Rng& rng);

/// Flip-count distribution of the shift mutation operator: Binomial(n, p)
/// with the mass of k = 0 moved onto k = 1, so an offspring always differs
/// from its parent. As p -> 0 this becomes the deterministic 1-bit flip.
class ShiftBinomial {
  public:
    ShiftBinomial(int n, double p);

    int n() const { return n_; }
    double p() const { return p_; }

    double pmf(int k) const;       // k in [0, n]; pmf(0) == 0
    int sample(Rng& rng) const;    // value in [1, n]

  private:
    int n_;
    double p_;
};

double shift_binomial_pmf(int n, double p, int k);
int sample_flip_count(const ShiftBinomial& dist, Rng& rng);

/// Samples k distinct positions in [0, n) by partial Fisher-Yates over a
/// persistent index array: O(k) work per call, no per-call allocation.
/// The array is left permuted between calls, which does not bias the draw.
class KSubsetSampler {
  public:
    explicit KSubsetSampler(int n);

    int n() const { return static_cast<int>(index_.size()); }

    // Writes the chosen positions into `out` (resized to k).
    void sample(int k, Rng& rng, std::vector<int>& out);

  private:
    std::vector<int> index_;
};

// Copy of x with exactly k distinct uniformly chosen positions inverted.
Genotype flip_k_bits(const Genotype& x, int k, Rng& rng);

}  // namespace evodp
