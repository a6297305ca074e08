#pragma once

#include <cstdint>

namespace traceval {

/**
 * Deterministic pseudo-random stream (splitmix64). Used instead of <random>
 * distributions so that seeded runs reproduce bit-for-bit on every platform.
 */
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /** Uniform double in [-1, 1). */
  double uniform_pm1() {
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
  }
};

/** Independent per-trial seed derived by hashing (seed, index). */
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  return mix.next();
}

}  // namespace traceval
