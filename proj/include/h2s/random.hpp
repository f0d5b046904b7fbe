#ifndef H2S_RANDOM_HPP
#define H2S_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "h2s/core.hpp"

namespace h2s {

// Only raw engine output is consumed (no std:: distributions) so seeded runs
// are identical across standard library implementations.
using Rng = std::mt19937_64;

/// splitmix64 finalizer; derives independent stream seeds from (seed, index).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index = 0) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Uniform integer in [lo, hi] (inclusive). Modulo bias is negligible for the
/// small ranges used here.
inline std::uint64_t uniform_int(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

/// Uniform real in [0, 1).
inline double uniform_real(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline bool coin(Rng& rng) { return (rng() >> 63) != 0; }

inline SignVector random_sign_vector(Rng& rng, std::size_t d) {
    std::vector<std::int8_t> e(d);
    for (auto& v : e) v = coin(rng) ? 1 : -1;
    return SignVector(std::move(e));
}

inline H2SInstance random_instance(Rng& rng, std::size_t k, std::size_t d) {
    std::vector<SignVector> vs;
    vs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) vs.push_back(random_sign_vector(rng, d));
    return H2SInstance(std::move(vs));
}

inline Bipartition random_partition(Rng& rng, std::size_t k) {
    Bipartition p(k);
    for (auto& s : p.side) s = coin(rng) ? Side::Two : Side::One;
    return p;
}

}  // namespace h2s

#endif  // H2S_RANDOM_HPP
