#pragma once

#include <cstdint>
#include <random>

namespace hyperchroma {

/// Seeded engine used by every randomized routine. The distribution helpers
/// below only consume raw 64-bit outputs, so a given seed yields the same
/// stream on every standard library.
using Rng = std::mt19937_64;

/// Derives an independent seed for a sub-step from a parent seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    // splitmix64 finalizer over seed + stream * golden ratio
    std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Uniform integer in [0, bound). bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound)
{
    // Rejection on the largest multiple of bound.
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
    std::uint64_t draw = rng();
    while (draw > limit) {
        draw = rng();
    }
    return draw % bound;
}

/// Uniform integer in [lo, hi].
inline std::int64_t uniform_between(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

/// Uniform real in [0, 1) with 53 bits of precision.
inline double uniform_unit(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p)
{
    return uniform_unit(rng) < p;
}

} // namespace hyperchroma
