#pragma once

#include <cstdint>
#include <stdexcept>

#include "goldenfa/angle.hpp"

namespace goldenfa {

/// Deterministic spoke-heading sequence: the i-th heading is
/// (offset + i * increment) mod 2*pi. The default increment is the golden
/// ratio in radians, which keeps consecutive headings maximally spread.
struct SpokeSequence {
  double increment = golden_ratio;  // radians, > 0
  double offset = 0.0;              // radians

  [[nodiscard]] bool valid() const noexcept { return increment > 0.0; }
};

/// Heading of the i-th spoke of a single searcher.
///
/// Uses direct multiplication (not iterated addition) so the result is exact
/// to one rounding of i*increment even for large i.
inline Angle golden_spoke_angle(std::uint64_t i, const SpokeSequence& seq = {}) {
  if (!seq.valid()) throw std::invalid_argument("SpokeSequence.increment must be > 0");
  return Angle(seq.offset + static_cast<double>(i) * seq.increment);
}

/// Heading of searcher s's t-th spoke in a swarm of N searchers.
///
/// Searcher s starts offset by (s-1) increments and advances N increments per
/// step, so the union over all searchers reproduces the single-searcher
/// sequence: this is spoke number (s-1) + t*N.
inline Angle multi_searcher_angle(std::uint32_t s, std::uint64_t t, std::uint32_t n_searchers,
                                  const SpokeSequence& seq = {}) {
  if (s < 1 || s > n_searchers) throw std::invalid_argument("searcher rank out of range");
  return golden_spoke_angle(static_cast<std::uint64_t>(s - 1) + t * n_searchers, seq);
}

}  // namespace goldenfa
