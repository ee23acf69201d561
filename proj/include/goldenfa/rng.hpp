#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "goldenfa/angle.hpp"

namespace goldenfa {

// Seed derivation must be stable across platforms and builds (std::hash is
// not), so sweeps mix seeds with splitmix64 + FNV-1a explicitly.

inline std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Stable 64-bit seed for (master_seed, key, index), e.g. one sweep trial.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view key,
                                 std::uint64_t index) noexcept {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ fnv1a64(key));
  return splitmix64(h ^ index);
}

/// Uniform double in [0, 1) from the engine's top 53 bits.
inline double uniform01(std::mt19937_64& eng) noexcept {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Uniform angle in [0, 2*pi).
inline double uniform_angle(std::mt19937_64& eng) noexcept {
  return uniform01(eng) * two_pi;
}

}  // namespace goldenfa
