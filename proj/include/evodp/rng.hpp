#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace evodp {

using Rng = std::mt19937_64;

// splitmix64 step; advances the state and returns the next output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives a child seed from a root seed and a path of indices.
// Independent of evaluation order: the same (seed, path) always yields
// the same stream, so work units can be scheduled on any worker.
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = seed;
    std::uint64_t out = splitmix64(s);
    for (std::uint64_t part : path) {
        s = out ^ part;
        out = splitmix64(s);
    }
    return out;
}

inline Rng make_stream(std::uint64_t seed,
                       std::initializer_list<std::uint64_t> path) {
    return Rng(derive_seed(seed, path));
}

// Uniform double in [0, 1) using the top 53 bits of one engine output.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased uniform integer in [0, bound). bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

}  // namespace evodp
