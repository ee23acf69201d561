#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "goldenfa/angle.hpp"
#include "goldenfa/sequence.hpp"

namespace goldenfa {

/// Widths equal within this tolerance count as the same circular gap.
inline constexpr double gap_merge_tolerance = 1e-9;

struct GapEntry {
  double width = 0.0;        // radians
  std::uint64_t multiplicity = 0;
};

/// Circular gap structure of the first k spoke headings: distinct gap widths
/// (ascending) with multiplicities. Multiplicities sum to k and
/// sum(width * multiplicity) telescopes to 2*pi.
struct GapStructure {
  std::uint64_t k = 0;
  std::vector<GapEntry> gaps;

  [[nodiscard]] double max_gap() const noexcept {
    return gaps.empty() ? 0.0 : gaps.back().width;
  }
  [[nodiscard]] std::size_t distinct_count() const noexcept { return gaps.size(); }
};

/// Gap structure of the first k headings of `seq`, by sort and circular diff.
inline GapStructure gap_structure(std::uint64_t k, const SpokeSequence& seq = {}) {
  if (k == 0) throw std::invalid_argument("gap_structure requires k >= 1");

  std::vector<double> pts;
  pts.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i) pts.push_back(golden_spoke_angle(i, seq).value());
  std::sort(pts.begin(), pts.end());

  std::vector<double> widths;
  widths.reserve(k);
  if (k == 1) {
    widths.push_back(two_pi);
  } else {
    for (std::uint64_t i = 1; i < k; ++i) widths.push_back(pts[i] - pts[i - 1]);
    widths.push_back(pts.front() + two_pi - pts.back());
  }
  std::sort(widths.begin(), widths.end());

  GapStructure out;
  out.k = k;
  double anchor = widths.front();
  double sum = 0.0;
  std::uint64_t count = 0;
  for (double w : widths) {
    if (w - anchor > gap_merge_tolerance) {
      out.gaps.push_back({sum / static_cast<double>(count), count});
      anchor = w;
      sum = 0.0;
      count = 0;
    }
    sum += w;
    ++count;
  }
  out.gaps.push_back({sum / static_cast<double>(count), count});
  return out;
}

/// True iff the structure has at most three distinct gap widths.
inline bool verify_three_gap(const GapStructure& g) noexcept {
  return g.distinct_count() <= 3;
}

/// Incrementally maintains the circular point set and its gap widths, so that
/// the max gap after each insertion is available in O(log k).
class CoverageTracker {
 public:
  void insert(double angle) {
    const double a = normalize_angle(angle);
    if (points_.empty()) {
      points_.insert(a);
      gaps_.insert(two_pi);
      return;
    }
    if (points_.count(a) > 0) {
      gaps_.insert(0.0);  // duplicate heading contributes a zero-width gap
      return;
    }
    auto next = points_.lower_bound(a);
    auto prev = next;
    const double next_v = (next == points_.end()) ? *points_.begin() : *next;
    const double prev_v = (next == points_.begin()) ? *points_.rbegin() : *std::prev(prev);
    gaps_.erase(gaps_.find(gap_width(prev_v, next_v)));
    gaps_.insert(gap_width(prev_v, a));
    gaps_.insert(gap_width(a, next_v));
    points_.insert(a);
  }

  [[nodiscard]] double max_gap() const noexcept {
    return gaps_.empty() ? two_pi : *gaps_.rbegin();
  }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }

 private:
  // Width from p to its clockwise successor n; the single-point wrap gap is 2*pi.
  static double gap_width(double p, double n) noexcept {
    if (p == n) return two_pi;
    double w = n - p;
    return w > 0.0 ? w : w + two_pi;
  }

  std::set<double> points_;
  std::multiset<double> gaps_;
};

/// Smallest k such that the max circular gap of the first k headings is <= theta.
/// Linear scan from k = 1; cheap for any theta of practical size.
inline std::uint64_t min_spokes_for_max_gap(double theta, const SpokeSequence& seq = {},
                                            std::uint64_t cap = 1'000'000) {
  if (!(theta > 0.0)) throw std::invalid_argument("min_spokes_for_max_gap requires theta > 0");
  CoverageTracker tracker;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    tracker.insert(golden_spoke_angle(k - 1, seq).value());
    if (tracker.max_gap() <= theta) return k;
  }
  throw std::runtime_error("min_spokes_for_max_gap: cap exceeded");
}

}  // namespace goldenfa
