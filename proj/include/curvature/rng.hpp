#pragma once

#include <cstdint>
#include <random>

namespace curv {

// std::mt19937_64 output is fixed by the standard but the std distributions
// are not; these keep seeded runs identical across standard libraries.

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound == 0 ? 0 : (~std::uint64_t{0} - bound + 1) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x >= limit) return x % bound;
  }
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace curv
