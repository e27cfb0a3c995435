#pragma once

// Portable sampling helpers on top of std::mt19937_64.
//
// The engine itself has a standardized output sequence, but the standard
// distributions do not, so every draw in the library goes through these
// functions to keep results identical across standard library vendors.

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace mtsp {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one engine output.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound). bound must be non-zero.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    // Rejection sampling on the largest multiple of bound.
    const std::uint64_t limit = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= limit) return r % bound;
    }
}

/// Fisher-Yates shuffle (descending index form).
template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace mtsp
