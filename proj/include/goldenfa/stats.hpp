#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "goldenfa/rng.hpp"

namespace goldenfa {

/// Per-cell aggregate of trial discovery times.
struct SummaryStats {
  double mean = 0.0;
  double std_dev = 0.0;  // sample standard deviation
  double p5 = 0.0;
  double p25 = 0.0;
  double p50 = 0.0;
  double p75 = 0.0;
  double p95 = 0.0;
  std::uint64_t outlier_count = 0;  // beyond 1.5*IQR outside [p25, p75]
  std::uint64_t n = 0;
};

/// Linear-interpolation quantile of a sorted sample, q in [0, 1].
inline double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty sample");
  if (sorted.size() == 1) return sorted[0];
  const double h = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

inline SummaryStats summarize(std::span<const double> sample) {
  if (sample.empty()) throw std::invalid_argument("summarize requires a non-empty sample");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());

  SummaryStats s;
  s.n = sorted.size();
  double sum = 0.0;
  for (double x : sorted) sum += x;
  s.mean = sum / static_cast<double>(s.n);
  double ss = 0.0;
  for (double x : sorted) ss += (x - s.mean) * (x - s.mean);
  s.std_dev = s.n > 1 ? std::sqrt(ss / static_cast<double>(s.n - 1)) : 0.0;
  s.p5 = quantile_sorted(sorted, 0.05);
  s.p25 = quantile_sorted(sorted, 0.25);
  s.p50 = quantile_sorted(sorted, 0.50);
  s.p75 = quantile_sorted(sorted, 0.75);
  s.p95 = quantile_sorted(sorted, 0.95);
  const double iqr = s.p75 - s.p25;
  const double lo = s.p25 - 1.5 * iqr;
  const double hi = s.p75 + 1.5 * iqr;
  for (double x : sorted)
    if (x < lo || x > hi) ++s.outlier_count;
  return s;
}

struct BootstrapInterval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Seeded percentile bootstrap CI for mean(a) - mean(b).
inline BootstrapInterval bootstrap_mean_diff_ci(std::span<const double> a,
                                                std::span<const double> b, std::uint64_t seed,
                                                std::uint32_t resamples = 10'000,
                                                double confidence = 0.95) {
  if (a.empty() || b.empty()) throw std::invalid_argument("bootstrap requires non-empty samples");
  std::mt19937_64 eng(seed);
  auto resample_mean = [&eng](std::span<const double> xs) {
    double sum = 0.0;
    const auto n = xs.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto idx = static_cast<std::size_t>(uniform01(eng) * static_cast<double>(n));
      if (idx >= n) idx = n - 1;
      sum += xs[idx];
    }
    return sum / static_cast<double>(n);
  };
  std::vector<double> diffs(resamples);
  for (auto& d : diffs) d = resample_mean(a) - resample_mean(b);
  std::sort(diffs.begin(), diffs.end());
  const double tail = (1.0 - confidence) / 2.0;
  return {quantile_sorted(diffs, tail), quantile_sorted(diffs, 1.0 - tail)};
}

}  // namespace goldenfa
