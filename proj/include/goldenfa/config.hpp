#pragma once

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "goldenfa/sim.hpp"
#include "goldenfa/sweep.hpp"

namespace goldenfa {

/// Flat `key = value` config text: one pair per line, `#` comments, lists
/// comma-separated. Duplicate keys are errors; keys nobody consumed are
/// errors (fail-fast reproducibility).
class FlatConfig {
 public:
  static FlatConfig parse(const std::string& text) {
    FlatConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const std::string trimmed = trim(line);
      if (trimmed.empty()) continue;
      const auto eq = trimmed.find('=');
      if (eq == std::string::npos)
        throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
      const std::string key = trim(trimmed.substr(0, eq));
      const std::string value = trim(trimmed.substr(eq + 1));
      if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
      if (cfg.values_.count(key))
        throw ConfigError("config: duplicate key '" + key + "'");
      cfg.values_[key] = value;
      cfg.order_.push_back(key);
    }
    return cfg;
  }

  static FlatConfig parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
  }

  [[nodiscard]] bool has(const std::string& key) const { return values_.count(key) > 0; }

  [[nodiscard]] std::string get_string(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("config: missing required key '" + key + "'");
    consumed_.insert(key);
    return it->second;
  }

  [[nodiscard]] std::string get_string_or(const std::string& key, const std::string& fallback) {
    return has(key) ? get_string(key) : fallback;
  }

  [[nodiscard]] double get_double(const std::string& key) {
    return parse_double(key, get_string(key));
  }
  [[nodiscard]] double get_double_or(const std::string& key, double fallback) {
    return has(key) ? get_double(key) : fallback;
  }

  [[nodiscard]] std::uint64_t get_u64(const std::string& key) {
    const std::string s = get_string(key);
    std::uint64_t out = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || p != s.data() + s.size())
      throw ConfigError("config: key '" + key + "' is not an unsigned integer: " + s);
    return out;
  }
  [[nodiscard]] std::uint64_t get_u64_or(const std::string& key, std::uint64_t fallback) {
    return has(key) ? get_u64(key) : fallback;
  }

  [[nodiscard]] std::vector<double> get_double_list(const std::string& key) {
    std::vector<double> out;
    for (const auto& item : split_list(get_string(key))) out.push_back(parse_double(key, item));
    return out;
  }

  [[nodiscard]] std::vector<std::string> get_string_list(const std::string& key) {
    return split_list(get_string(key));
  }

  /// Every key must have been consumed by some getter.
  void finish() const {
    for (const auto& key : order_)
      if (!consumed_.count(key)) throw ConfigError("config: unknown key '" + key + "'");
  }

  /// Resolved key/value pairs in file order (for the run manifest).
  [[nodiscard]] const std::vector<std::string>& keys_in_order() const { return order_; }
  [[nodiscard]] std::string raw(const std::string& key) const { return values_.at(key); }

 private:
  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

  static std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
      const std::string t = trim(item);
      if (!t.empty()) out.push_back(t);
    }
    return out;
  }

  static double parse_double(const std::string& key, const std::string& s) {
    double out = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || p != s.data() + s.size())
      throw ConfigError("config: key '" + key + "' is not a number: " + s);
    return out;
  }

  std::map<std::string, std::string> values_;
  std::vector<std::string> order_;
  std::set<std::string> consumed_;
};

struct TrialSetup {
  ArenaConfig arena;
  std::vector<ClusterSpec> clusters;
  SwarmConfig swarm;
};

namespace detail {

inline ArenaShape parse_arena_shape(const std::string& s) {
  if (s == "circle") return ArenaShape::circle;
  if (s == "square") return ArenaShape::square;
  throw ConfigError("arena.shape must be circle or square, got '" + s + "'");
}

inline ClusterShape parse_cluster_shape(const std::string& s) {
  if (s == "disk") return ClusterShape::disk;
  if (s == "square") return ClusterShape::square;
  throw ConfigError("cluster shape must be disk or square, got '" + s + "'");
}

inline SchedulerKind parse_scheduler(const std::string& s) {
  if (s == "golden") return SchedulerKind::golden;
  if (s == "ballistic") return SchedulerKind::ballistic;
  throw ConfigError("scheduler must be golden or ballistic, got '" + s + "'");
}

inline double parse_increment(const std::string& s) {
  if (s == "phi") return golden_ratio;
  if (s == "golden-angle") return golden_angle;
  double out = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ConfigError("sequence.increment must be phi, golden-angle or radians, got '" + s + "'");
  return out;
}

inline ArenaConfig parse_arena(FlatConfig& cfg) {
  ArenaConfig arena;
  arena.shape = parse_arena_shape(cfg.get_string_or("arena.shape", "circle"));
  arena.extent = cfg.get_double("arena.extent");
  return arena;
}

inline SpokeSequence parse_sequence(FlatConfig& cfg) {
  SpokeSequence seq;
  seq.increment = parse_increment(cfg.get_string_or("sequence.increment", "phi"));
  seq.offset = cfg.get_double_or("sequence.offset", 0.0);
  return seq;
}

inline std::optional<CongestionModel> parse_congestion(FlatConfig& cfg) {
  if (!cfg.has("congestion.nest_capacity") && !cfg.has("congestion.service_time"))
    return std::nullopt;
  CongestionModel m;
  m.nest_capacity = cfg.get_double("congestion.nest_capacity");
  m.service_time = cfg.get_double("congestion.service_time");
  return m;
}

}  // namespace detail

/// Single-trial config: arena.*, cluster.* (cluster2.*, cluster3.*, ... for
/// more clusters), swarm.*, and optional sequence.*, searcher.*, congestion.*.
inline TrialSetup parse_trial_config(FlatConfig& cfg) {
  TrialSetup setup;
  setup.arena = detail::parse_arena(cfg);

  for (int idx = 1;; ++idx) {
    const std::string prefix = idx == 1 ? "cluster." : "cluster" + std::to_string(idx) + ".";
    if (!cfg.has(prefix + "diameter")) {
      if (idx == 1) throw ConfigError("config: missing required key 'cluster.diameter'");
      break;
    }
    ClusterSpec c;
    c.bearing = Angle(cfg.get_double(prefix + "bearing"));
    c.distance = cfg.get_double(prefix + "distance");
    c.diameter = cfg.get_double(prefix + "diameter");
    c.shape = detail::parse_cluster_shape(cfg.get_string_or(prefix + "shape", "disk"));
    setup.clusters.push_back(c);
  }

  setup.swarm.n_searchers = static_cast<std::uint32_t>(cfg.get_u64_or("swarm.n", 1));
  setup.swarm.scheduler = detail::parse_scheduler(cfg.get_string_or("swarm.scheduler", "golden"));
  setup.swarm.spoke_cap = cfg.get_u64_or("swarm.spoke_cap", 10'000'000);
  setup.swarm.sequence = detail::parse_sequence(cfg);
  setup.swarm.searcher.speed = cfg.get_double_or("searcher.speed", 1.0);
  setup.swarm.congestion = detail::parse_congestion(cfg);
  cfg.finish();
  return setup;
}

/// Sweep/compare config: arena.*, sweep.*, and optional sequence.*,
/// searcher.*, congestion.*, swarm.spoke_cap.
inline SweepConfig parse_sweep_config(FlatConfig& cfg) {
  SweepConfig sweep;
  sweep.arena = detail::parse_arena(cfg);
  sweep.delta_grid = cfg.get_double_list("sweep.delta_grid");
  for (const auto& s : cfg.get_string_list("sweep.n_grid")) {
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
      throw ConfigError("sweep.n_grid entries must be unsigned integers");
    sweep.n_grid.push_back(v);
  }

  sweep.schedulers.clear();
  for (const auto& s : cfg.get_string_list("sweep.schedulers"))
    sweep.schedulers.push_back(detail::parse_scheduler(s));
  sweep.trials_per_cell = static_cast<std::uint32_t>(cfg.get_u64("sweep.trials_per_cell"));
  if (cfg.has("sweep.master_seed")) sweep.master_seed = cfg.get_u64("sweep.master_seed");

  const std::string placement = cfg.get_string_or("sweep.placement", "uniform");
  if (placement == "uniform") {
    sweep.placement = PlacementMode::uniform;
  } else if (placement == "fixed_distance") {
    sweep.placement = PlacementMode::fixed_distance;
    sweep.fixed_distance = cfg.get_double("sweep.distance");
  } else {
    throw ConfigError("sweep.placement must be uniform or fixed_distance, got '" + placement + "'");
  }
  sweep.cluster_shape = detail::parse_cluster_shape(cfg.get_string_or("sweep.cluster_shape", "disk"));
  sweep.sequence = detail::parse_sequence(cfg);
  sweep.searcher.speed = cfg.get_double_or("searcher.speed", 1.0);
  sweep.congestion = detail::parse_congestion(cfg);
  sweep.spoke_cap = cfg.get_u64_or("swarm.spoke_cap", 10'000'000);
  cfg.finish();
  return sweep;
}

}  // namespace goldenfa
