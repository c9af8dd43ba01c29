#pragma once

#include <cstdint>
#include <random>

namespace mixtran {

// Deterministic draws over std::mt19937_64. The distributions are written
// out here because the standard-library distribution objects are
// implementation-defined; datasets and query samples must be reproducible
// from the seed alone.

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n), unbiased via rejection.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t n) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
  std::uint64_t v = gen();
  while (v >= limit) v = gen();
  return v % n;
}

}  // namespace mixtran
