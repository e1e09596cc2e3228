#pragma once

#include <cstdint>

// Counter-based deterministic random numbers: every draw is a pure
// function of (seed, counter), so streams are reproducible across
// platforms and safe to evaluate in any order.

namespace shannon::rng {

// splitmix64 finalizer applied to seed ^ golden-ratio-spaced counter.
std::uint64_t hash64(std::uint64_t seed, std::uint64_t counter);

struct CounterRng {
    std::uint64_t seed = 0;

    // Uniform on [0, 1).
    double uniform(std::uint64_t counter) const;

    // Uniform on [-1, 1).
    double symmetric(std::uint64_t counter) const;

    // Standard normal via Box-Muller; consumes counters 2c and 2c+1.
    double gaussian(std::uint64_t counter) const;
};

} // namespace shannon::rng
