#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "goldenfa/stats.hpp"
#include "goldenfa/sweep.hpp"

namespace goldenfa {

/// Paired per-cell comparison of two schedulers on the same grid.
struct ComparisonCell {
  double delta = 0.0;
  std::uint32_t n_searchers = 1;
  SummaryStats stats_a;
  SummaryStats stats_b;
  double mean_diff = 0.0;   // mean(a) - mean(b)
  double std_ratio = 0.0;   // std(a) / std(b)
  BootstrapInterval mean_diff_ci;
};

struct ComparisonReport {
  SchedulerKind scheduler_a = SchedulerKind::golden;
  SchedulerKind scheduler_b = SchedulerKind::ballistic;
  std::vector<ComparisonCell> cells;
};

/// Run both schedulers over the (delta, n) grid and report per-cell mean
/// difference, spread ratio, outlier counts and a seeded bootstrap CI for the
/// mean difference.
inline ComparisonReport compare_algorithms(const SweepConfig& cfg,
                                           std::uint32_t bootstrap_resamples = 10'000) {
  cfg.validate();
  if (cfg.schedulers.size() != 2)
    throw ConfigError("compare_algorithms requires exactly two schedulers");

  ComparisonReport report;
  report.scheduler_a = cfg.schedulers[0];
  report.scheduler_b = cfg.schedulers[1];
  for (double delta : cfg.delta_grid) {
    for (std::uint32_t n : cfg.n_grid) {
      const SweepCell cell_a{report.scheduler_a, delta, n};
      const SweepCell cell_b{report.scheduler_b, delta, n};
      auto times_a = collect_cell_times(cfg, cell_a);
      auto times_b = collect_cell_times(cfg, cell_b);
      if (times_a.empty() || times_b.empty())
        throw ConfigError("comparison cell produced no successful trials");

      ComparisonCell out;
      out.delta = delta;
      out.n_searchers = n;
      out.stats_a = summarize(times_a);
      out.stats_b = summarize(times_b);
      out.mean_diff = out.stats_a.mean - out.stats_b.mean;
      out.std_ratio = out.stats_b.std_dev == 0.0
                          ? (out.stats_a.std_dev == 0.0 ? 1.0 : std::numeric_limits<double>::infinity())
                          : out.stats_a.std_dev / out.stats_b.std_dev;
      const std::uint64_t ci_seed =
          derive_seed(cfg.master_seed, "bootstrap;" + cell_a.key(cfg.arena), n);
      out.mean_diff_ci =
          bootstrap_mean_diff_ci(times_a, times_b, ci_seed, bootstrap_resamples);
      report.cells.push_back(out);
    }
  }
  return report;
}

}  // namespace goldenfa
