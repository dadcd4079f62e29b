#pragma once

#include <cstdint>
#include <random>

namespace gcq {

// All randomness in the project flows through mt19937_64 plus these two
// helpers, so runs are bit-reproducible for a given seed regardless of the
// standard library's distribution implementations.
using Rng = std::mt19937_64;

inline double uniform_unit(Rng& rng) {
  // 53 random mantissa bits -> [0, 1).
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

// Uniform integer in [0, n).
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  // Rejection sampling over the top multiple of n keeps the draw unbiased.
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Deterministic per-record stream derived from a base seed (splitmix64),
// so dataset records can be generated independently in any order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace gcq
