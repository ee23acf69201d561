#pragma once

#include <string>
#include <vector>

#include "goldenfa/compare.hpp"
#include "goldenfa/format.hpp"
#include "goldenfa/gaps.hpp"
#include "goldenfa/sweep.hpp"

namespace goldenfa {

/// results.csv body. Column order is a stable contract; all numbers are
/// rendered at 17 significant digits, so reruns are byte-identical.
inline std::string sweep_results_csv(const std::vector<SweepRow>& rows,
                                     const ArenaConfig& arena) {
  std::string out =
      "scheduler,arena_shape,extent_m,delta_m,n_searchers,trials,"
      "mean_s,std_s,p5_s,p25_s,p50_s,p75_s,p95_s,outliers\n";
  const char* shape = arena.shape == ArenaShape::circle ? "circle" : "square";
  for (const auto& row : rows) {
    out += scheduler_name(row.cell.scheduler);
    out += ',';
    out += shape;
    out += ',';
    out += fmt17(arena.extent) + ',';
    out += fmt17(row.cell.delta) + ',';
    out += std::to_string(row.cell.n_searchers) + ',';
    out += std::to_string(row.stats.n) + ',';
    out += fmt17(row.stats.mean) + ',';
    out += fmt17(row.stats.std_dev) + ',';
    out += fmt17(row.stats.p5) + ',';
    out += fmt17(row.stats.p25) + ',';
    out += fmt17(row.stats.p50) + ',';
    out += fmt17(row.stats.p75) + ',';
    out += fmt17(row.stats.p95) + ',';
    out += std::to_string(row.stats.outlier_count) + '\n';
  }
  return out;
}

/// comparison.csv body: one row per (delta, n) cell.
inline std::string comparison_csv(const ComparisonReport& report) {
  std::string out =
      "scheduler_a,scheduler_b,delta_m,n_searchers,trials,"
      "mean_a_s,mean_b_s,mean_diff_s,std_a_s,std_b_s,std_ratio,"
      "outliers_a,outliers_b,ci95_lo_s,ci95_hi_s\n";
  for (const auto& c : report.cells) {
    out += scheduler_name(report.scheduler_a);
    out += ',';
    out += scheduler_name(report.scheduler_b);
    out += ',';
    out += fmt17(c.delta) + ',';
    out += std::to_string(c.n_searchers) + ',';
    out += std::to_string(c.stats_a.n) + ',';
    out += fmt17(c.stats_a.mean) + ',';
    out += fmt17(c.stats_b.mean) + ',';
    out += fmt17(c.mean_diff) + ',';
    out += fmt17(c.stats_a.std_dev) + ',';
    out += fmt17(c.stats_b.std_dev) + ',';
    out += fmt17(c.std_ratio) + ',';
    out += std::to_string(c.stats_a.outlier_count) + ',';
    out += std::to_string(c.stats_b.outlier_count) + ',';
    out += fmt17(c.mean_diff_ci.lower) + ',';
    out += fmt17(c.mean_diff_ci.upper) + '\n';
  }
  return out;
}

/// Gap table printed by the `gaps` subcommand.
inline std::string gaps_csv(const GapStructure& g) {
  std::string out = "gap_width_rad,multiplicity\n";
  for (const auto& e : g.gaps) out += fmt17(e.width) + ',' + std::to_string(e.multiplicity) + '\n';
  out += "# k = " + std::to_string(g.k) + '\n';
  out += "# max_gap_rad = " + fmt17(g.max_gap()) + '\n';
  out += "# distinct_gaps = " + std::to_string(g.distinct_count()) + '\n';
  out += std::string("# three_gap = ") + (verify_three_gap(g) ? "pass" : "fail") + '\n';
  return out;
}

}  // namespace goldenfa
