#pragma once

#include <cstdint>
#include <random>

namespace fvs {

/// All randomness in the library flows through explicitly passed streams.
using Rng = std::mt19937_64;

/// Seed for an independent sub-stream (splitmix64 finaliser over seed/index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Rng split(Rng& rng) { return Rng(derive_seed(rng(), 0)); }

}  // namespace fvs
