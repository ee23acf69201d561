#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "goldenfa/format.hpp"
#include "goldenfa/rng.hpp"
#include "goldenfa/sim.hpp"
#include "goldenfa/stats.hpp"

namespace goldenfa {

/// How the cluster is placed for each trial.
enum class PlacementMode {
  uniform,         // center uniform over all fully contained positions
  fixed_distance,  // fixed distance from the nest, bearing uniform
};

inline const char* scheduler_name(SchedulerKind k) noexcept {
  return k == SchedulerKind::golden ? "golden" : "ballistic";
}

/// Grid sweep: every (scheduler, delta, n) cell runs trials_per_cell seeded
/// trials with per-trial cluster placement.
struct SweepConfig {
  ArenaConfig arena;
  std::vector<double> delta_grid;
  std::vector<std::uint32_t> n_grid;
  std::vector<SchedulerKind> schedulers = {SchedulerKind::golden};
  std::uint32_t trials_per_cell = 100;
  std::uint64_t master_seed = 0;
  PlacementMode placement = PlacementMode::uniform;
  double fixed_distance = 0.0;  // used by PlacementMode::fixed_distance
  ClusterShape cluster_shape = ClusterShape::disk;
  SpokeSequence sequence{};
  SearcherConfig searcher{};
  std::optional<CongestionModel> congestion;
  std::uint64_t spoke_cap = 10'000'000;

  void validate() const {
    if (!arena.valid()) throw ConfigError("arena.extent must be > 0");
    if (delta_grid.empty()) throw ConfigError("sweep.delta_grid must be non-empty");
    if (n_grid.empty()) throw ConfigError("sweep.n_grid must be non-empty");
    if (schedulers.empty()) throw ConfigError("sweep.schedulers must be non-empty");
    if (trials_per_cell < 1) throw ConfigError("sweep.trials_per_cell must be >= 1");
    for (double d : delta_grid)
      if (!(d > 0.0)) throw ConfigError("sweep.delta_grid entries must be > 0");
    for (std::uint32_t n : n_grid)
      if (n < 1) throw ConfigError("sweep.n_grid entries must be >= 1");
    if (placement == PlacementMode::fixed_distance && !(fixed_distance > 0.0))
      throw ConfigError("sweep.distance must be > 0 for fixed_distance placement");
  }
};

struct SweepCell {
  SchedulerKind scheduler = SchedulerKind::golden;
  double delta = 0.0;
  std::uint32_t n_searchers = 1;

  /// Content-derived key; trial seeds hash this, so reordering a grid never
  /// changes any cell's trials.
  [[nodiscard]] std::string key(const ArenaConfig& arena) const {
    std::string k = "scheduler=";
    k += scheduler_name(scheduler);
    k += ";shape=";
    k += arena.shape == ArenaShape::circle ? "circle" : "square";
    k += ";extent=" + fmt17(arena.extent);
    k += ";delta=" + fmt17(delta);
    k += ";n=" + std::to_string(n_searchers);
    return k;
  }
};

struct SweepRow {
  SweepCell cell;
  SummaryStats stats;
  std::uint32_t failed_trials = 0;
  std::string first_error;
};

/// Deterministic grid order: scheduler-major, then delta, then n.
inline std::vector<SweepCell> sweep_cells(const SweepConfig& cfg) {
  std::vector<SweepCell> cells;
  cells.reserve(cfg.schedulers.size() * cfg.delta_grid.size() * cfg.n_grid.size());
  for (auto sched : cfg.schedulers)
    for (double delta : cfg.delta_grid)
      for (std::uint32_t n : cfg.n_grid) cells.push_back({sched, delta, n});
  return cells;
}

namespace detail {

inline double run_one_trial(const SweepConfig& cfg, const SweepCell& cell,
                            std::uint64_t trial_seed) {
  std::vector<ClusterSpec> clusters;
  if (cfg.placement == PlacementMode::uniform) {
    clusters.push_back(place_cluster(cfg.arena, cell.delta,
                                     derive_seed(trial_seed, "placement", 0), cfg.cluster_shape));
  } else {
    std::mt19937_64 eng(derive_seed(trial_seed, "placement", 0));
    ClusterSpec c;
    c.bearing = Angle(uniform_angle(eng));
    c.distance = cfg.fixed_distance;
    c.diameter = cell.delta;
    c.shape = cfg.cluster_shape;
    clusters.push_back(c);
  }
  SwarmConfig swarm;
  swarm.n_searchers = cell.n_searchers;
  swarm.scheduler = cell.scheduler;
  swarm.sequence = cfg.sequence;
  swarm.searcher = cfg.searcher;
  swarm.congestion = cfg.congestion;
  swarm.spoke_cap = cfg.spoke_cap;
  return simulate_trial(cfg.arena, clusters, swarm, trial_seed).discovery_time;
}

}  // namespace detail

/// Per-trial discovery times for one cell. Trial j's seed derives from
/// (master_seed, cell key, j) only, so results are independent of execution
/// order and concurrency. Failed trials are recorded, not fatal.
inline std::vector<double> collect_cell_times(const SweepConfig& cfg, const SweepCell& cell,
                                              std::uint32_t* failed = nullptr,
                                              std::string* first_error = nullptr) {
  const std::string key = cell.key(cfg.arena);
  std::vector<double> times;
  times.reserve(cfg.trials_per_cell);
  for (std::uint32_t j = 0; j < cfg.trials_per_cell; ++j) {
    const std::uint64_t trial_seed = derive_seed(cfg.master_seed, key, j);
    try {
      times.push_back(detail::run_one_trial(cfg, cell, trial_seed));
    } catch (const std::runtime_error& e) {  // spoke cap or infeasible cell
      if (failed) ++*failed;
      if (first_error && first_error->empty()) *first_error = e.what();
    }
  }
  return times;
}

/// Run the whole grid. `workers` > 1 evaluates cells concurrently; output is
/// bitwise identical for any worker count.
inline std::vector<SweepRow> run_sweep(const SweepConfig& cfg, unsigned workers = 1) {
  cfg.validate();
  const auto cells = sweep_cells(cfg);
  std::vector<SweepRow> rows(cells.size());

  auto run_cell = [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.cell = cells[i];
    auto times = collect_cell_times(cfg, cells[i], &row.failed_trials, &row.first_error);
    if (!times.empty()) row.stats = summarize(times);
    row.stats.n = times.size();
  };

  if (workers <= 1 || cells.size() <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned count = std::min<std::size_t>(workers, cells.size());
  pool.reserve(count);
  for (unsigned w = 0; w < count; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) run_cell(i);
    });
  }
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace goldenfa
