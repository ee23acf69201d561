#include <algorithm>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "goldenfa/compare.hpp"
#include "goldenfa/gaps.hpp"
#include "goldenfa/csv.hpp"

using namespace goldenfa;

namespace {

SweepConfig compare_config() {
  SweepConfig cfg;
  cfg.arena = {ArenaShape::circle, 50.0};
  cfg.delta_grid = {4.8};
  cfg.n_grid = {2};
  cfg.schedulers = {SchedulerKind::golden, SchedulerKind::ballistic};
  cfg.trials_per_cell = 60;
  cfg.master_seed = 11;
  cfg.placement = PlacementMode::fixed_distance;
  cfg.fixed_distance = 33.333;
  return cfg;
}

}  // namespace

TEST_CASE("self-comparison reports zero mean difference") {
  SweepConfig cfg = compare_config();
  cfg.schedulers = {SchedulerKind::golden, SchedulerKind::golden};
  cfg.trials_per_cell = 20;
  const ComparisonReport report = compare_algorithms(cfg, 2000);
  REQUIRE(report.cells.size() == 1);
  CHECK(report.cells[0].mean_diff == 0.0);
  CHECK(report.cells[0].std_ratio == Catch::Approx(1.0));
  CHECK(report.cells[0].mean_diff_ci.lower <= 0.0);
  CHECK(report.cells[0].mean_diff_ci.upper >= 0.0);
}

TEST_CASE("golden beats ballistic on the fixture cell") {
  const ComparisonReport report = compare_algorithms(compare_config(), 4000);
  REQUIRE(report.cells.size() == 1);
  const ComparisonCell& cell = report.cells[0];
  CHECK(cell.mean_diff < 0.0);  // golden mean below ballistic mean
  CHECK(cell.std_ratio < 1.0);
  CHECK(cell.mean_diff_ci.upper < 0.0);
}

TEST_CASE("compare_algorithms requires exactly two schedulers") {
  SweepConfig cfg = compare_config();
  cfg.schedulers = {SchedulerKind::golden};
  CHECK_THROWS_AS(compare_algorithms(cfg), ConfigError);
  cfg.schedulers = {SchedulerKind::golden, SchedulerKind::ballistic, SchedulerKind::golden};
  CHECK_THROWS_AS(compare_algorithms(cfg), ConfigError);
}

TEST_CASE("golden worst case stays below the ballistic 95th percentile") {
  // worst-case golden spokes-to-hit (bearing grid) vs empirical ballistic q95,
  // N=10, fixed D; asymptotic claim, so the near-degenerate D/Delta ~ 1.7 cell
  // (delta 19.2) is excluded
  const double distance = 33.333;
  SweepConfig cfg = compare_config();
  cfg.trials_per_cell = 500;
  for (double delta : {1.2, 2.4, 4.8, 9.6}) {
    std::uint64_t worst_golden = 0;
    for (int j = 0; j < 2000; ++j) {
      const Angle bearing(two_pi * static_cast<double>(j) / 2000.0);
      std::uint64_t i = 0;
      while (!ray_hits_disk(golden_spoke_angle(i), bearing, distance, delta)) ++i;
      worst_golden = std::max(worst_golden, i + 1);
    }

    const SweepCell cell{SchedulerKind::ballistic, delta, 10};
    const std::string key = cell.key(cfg.arena);
    std::vector<double> spokes;
    for (std::uint32_t j = 0; j < cfg.trials_per_cell; ++j) {
      const std::uint64_t trial_seed = derive_seed(cfg.master_seed, key, j);
      std::mt19937_64 eng(derive_seed(trial_seed, "placement", 0));
      ClusterSpec cluster;
      cluster.bearing = Angle(uniform_angle(eng));
      cluster.distance = distance;
      cluster.diameter = delta;
      SwarmConfig swarm;
      swarm.n_searchers = 10;
      swarm.scheduler = SchedulerKind::ballistic;
      const TrialResult r = simulate_trial(cfg.arena, {cluster}, swarm, trial_seed);
      spokes.push_back(static_cast<double>(r.full_spokes_completed + 1));
    }
    std::sort(spokes.begin(), spokes.end());
    CHECK(static_cast<double>(worst_golden) < quantile_sorted(spokes, 0.95));
  }
}

TEST_CASE("comparison csv is shaped and reproducible") {
  SweepConfig cfg = compare_config();
  cfg.trials_per_cell = 15;
  cfg.delta_grid = {2.4, 4.8};
  const std::string a = comparison_csv(compare_algorithms(cfg, 500));
  const std::string b = comparison_csv(compare_algorithms(cfg, 500));
  CHECK(a == b);
  CHECK(a.rfind("scheduler_a,scheduler_b,delta_m,n_searchers,trials,", 0) == 0);
  CHECK(std::count(a.begin(), a.end(), '\n') == 3);  // header + two cells
}
