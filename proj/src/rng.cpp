#include "shannon/rng.hpp"

#include <cmath>

namespace shannon::rng {

std::uint64_t hash64(std::uint64_t seed, std::uint64_t counter)
{
    std::uint64_t z = seed + counter * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double CounterRng::uniform(std::uint64_t counter) const
{
    // 53 high bits -> dyadic rational in [0, 1).
    return static_cast<double>(hash64(seed, counter) >> 11) * 0x1.0p-53;
}

double CounterRng::symmetric(std::uint64_t counter) const
{
    return 2.0 * uniform(counter) - 1.0;
}

double CounterRng::gaussian(std::uint64_t counter) const
{
    const double u1 = uniform(2 * counter);
    const double u2 = uniform(2 * counter + 1);
    const double r = std::sqrt(-2.0 * std::log1p(u1 - 1.0 + 0x1.0p-53));
    return r * std::cos(2.0 * M_PI * u2);
}

} // namespace shannon::rng
