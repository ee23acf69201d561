#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "goldenfa/angle.hpp"
#include "goldenfa/geometry.hpp"
#include "goldenfa/rng.hpp"
#include "goldenfa/sequence.hpp"

namespace goldenfa {

/// Invalid or infeasible configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A searcher exceeded the per-trial spoke cap (CLI exit code 3).
class SpokeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ClusterShape { disk, square };

/// Target cluster at polar (bearing, distance) from the nest. `diameter` is
/// the circumscribed diameter; a square cluster has side diameter/sqrt(2).
struct ClusterSpec {
  Angle bearing;
  double distance = 0.0;  // meters, >= 0
  double diameter = 1.0;  // meters, > 0
  ClusterShape shape = ClusterShape::disk;

  [[nodiscard]] double side() const noexcept { return diameter / std::numbers::sqrt2; }
};

struct SearcherConfig {
  double speed = 1.0;  // meters/second, > 0
};

enum class SchedulerKind { golden, ballistic };

/// Nest-transit contention. Capacity is transit slots per second; each
/// contending searcher adds service_time/nest_capacity of delay.
struct CongestionModel {
  double nest_capacity = 1.0;  // > 0
  double service_time = 1.0;   // seconds, >= 0
};

/// Queueing delay of the event_index-th simultaneous nest transit
/// (0-based): event_index / capacity * service_time.
inline double congestion_delay(std::uint64_t event_index, const CongestionModel& model) {
  if (!(model.nest_capacity > 0.0)) throw ConfigError("congestion.nest_capacity must be > 0");
  if (model.service_time < 0.0) throw ConfigError("congestion.service_time must be >= 0");
  return std::max(0.0, static_cast<double>(event_index) / model.nest_capacity * model.service_time);
}

struct SwarmConfig {
  std::uint32_t n_searchers = 1;
  SchedulerKind scheduler = SchedulerKind::golden;
  SpokeSequence sequence{};
  SearcherConfig searcher{};
  std::optional<CongestionModel> congestion;
  std::uint64_t spoke_cap = 10'000'000;
};

struct TrialResult {
  double discovery_time = 0.0;            // seconds to first cluster contact
  std::uint32_t discovering_searcher = 0;  // rank, 1-based
  std::uint64_t hit_spoke_index = 0;       // discoverer's step t
  std::uint64_t full_spokes_completed = 0; // across the swarm, by discovery time
  double distance_travelled_total = 0.0;   // meters, across the swarm
  Angle hit_angle;
};

/// First-intersection distance of the ray at `theta` with the cluster region,
/// or nullopt. A nest on or inside the cluster is hit at distance 0.
inline std::optional<double> cluster_hit_distance(Angle theta, const ClusterSpec& cluster) {
  if (cluster.distance <= 0.0) return 0.0;  // cluster centered on the nest
  if (cluster.shape == ClusterShape::disk)
    return ray_hits_disk(theta, cluster.bearing, cluster.distance, cluster.diameter);
  return ray_hits_square(theta, cluster.bearing, cluster.distance, cluster.side());
}

/// Nearest hit across all clusters, or nullopt.
inline std::optional<double> nearest_cluster_hit(Angle theta,
                                                 const std::vector<ClusterSpec>& clusters) {
  std::optional<double> best;
  for (const auto& c : clusters) {
    auto h = cluster_hit_distance(theta, c);
    if (h && (!best || *h < *best)) best = h;
  }
  return best;
}

namespace detail {

inline bool cluster_inside_arena(const ArenaConfig& arena, const ClusterSpec& c) {
  const double cx = c.distance * std::cos(c.bearing.value());
  const double cy = c.distance * std::sin(c.bearing.value());
  if (arena.shape == ArenaShape::circle) {
    if (c.shape == ClusterShape::disk) return c.distance + c.diameter / 2.0 <= arena.extent;
    const double h = c.side() / 2.0;
    const double fx = std::fabs(cx) + h;
    const double fy = std::fabs(cy) + h;
    return std::hypot(fx, fy) <= arena.extent;
  }
  const double h = (c.shape == ClusterShape::disk) ? c.diameter / 2.0 : c.side() / 2.0;
  return std::fabs(cx) + h <= arena.extent && std::fabs(cy) + h <= arena.extent;
}

inline void validate_trial_config(const ArenaConfig& arena, const std::vector<ClusterSpec>& clusters,
                                  const SwarmConfig& swarm) {
  if (!arena.valid()) throw ConfigError("arena.extent must be > 0");
  if (swarm.n_searchers < 1) throw ConfigError("swarm.n must be >= 1");
  if (!(swarm.searcher.speed > 0.0)) throw ConfigError("searcher.speed must be > 0");
  if (!swarm.sequence.valid()) throw ConfigError("sequence.increment must be > 0");
  if (clusters.empty()) throw ConfigError("at least one cluster is required");
  for (const auto& c : clusters) {
    if (!(c.diameter > 0.0)) throw ConfigError("cluster.diameter must be > 0");
    if (c.distance < 0.0) throw ConfigError("cluster.distance must be >= 0");
    if (!cluster_inside_arena(arena, c)) throw ConfigError("cluster not fully inside the arena");
  }
  if (swarm.congestion) {
    if (!(swarm.congestion->nest_capacity > 0.0))
      throw ConfigError("congestion.nest_capacity must be > 0");
    if (swarm.congestion->service_time < 0.0)
      throw ConfigError("congestion.service_time must be >= 0");
  }
}

/// Heading of searcher s's t-th spoke; ballistic searchers draw from `eng`.
inline Angle spoke_heading(std::uint32_t s, std::uint64_t t, const SwarmConfig& swarm,
                           std::mt19937_64* eng) {
  if (swarm.scheduler == SchedulerKind::golden)
    return multi_searcher_angle(s, t, swarm.n_searchers, swarm.sequence);
  return Angle(uniform_angle(*eng));
}

inline std::mt19937_64 searcher_stream(std::uint64_t trial_seed, std::uint32_t s) {
  return std::mt19937_64(derive_seed(trial_seed, "searcher", s));
}

}  // namespace detail

struct Detection {
  double time = 0.0;         // seconds from trial start to cluster contact
  std::uint64_t step = 0;    // per-searcher spoke index t of the hit
  double hit_distance = 0.0; // meters from nest to contact
  Angle angle;               // heading of the hitting spoke
};

/// Detection time of searcher `s` running in isolation (no nest contention):
/// every non-hitting spoke costs a full out-and-back, the hitting spoke costs
/// its one-way contact distance. Ballistic headings replay deterministically
/// from (trial_seed, s).
inline std::optional<Detection> searcher_detection_time(std::uint32_t s, const SwarmConfig& swarm,
                                                        const ArenaConfig& arena,
                                                        const std::vector<ClusterSpec>& clusters,
                                                        std::uint64_t trial_seed = 0) {
  detail::validate_trial_config(arena, clusters, swarm);
  if (s < 1 || s > swarm.n_searchers) throw ConfigError("searcher rank out of range");
  const double v = swarm.searcher.speed;
  std::mt19937_64 eng = detail::searcher_stream(trial_seed, s);
  double elapsed = 0.0;
  for (std::uint64_t t = 0;; ++t) {
    if (t >= swarm.spoke_cap) throw SpokeCapError("spoke cap exceeded before discovery");
    const Angle heading = detail::spoke_heading(s, t, swarm, &eng);
    if (auto hit = nearest_cluster_hit(heading, clusters))
      return Detection{elapsed + *hit / v, t, *hit, heading};
    elapsed += 2.0 * ray_exit_distance(heading, arena) / v;
  }
}

namespace detail {

/// Full spokes searcher `s` completes by time `horizon` when running the same
/// schedule as searcher_detection_time.
inline std::uint64_t full_spokes_by(std::uint32_t s, const SwarmConfig& swarm,
                                    const ArenaConfig& arena,
                                    const std::vector<ClusterSpec>& clusters,
                                    std::uint64_t trial_seed, double horizon) {
  const double v = swarm.searcher.speed;
  std::mt19937_64 eng = searcher_stream(trial_seed, s);
  double elapsed = 0.0;
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < swarm.spoke_cap; ++t) {
    const Angle heading = spoke_heading(s, t, swarm, &eng);
    if (nearest_cluster_hit(heading, clusters)) return count;  // partial by construction
    const double cost = 2.0 * ray_exit_distance(heading, arena) / v;
    if (elapsed + cost > horizon) return count;
    elapsed += cost;
    ++count;
  }
  return count;
}

struct CongestedOutcome {
  Detection detection;
  std::uint32_t rank = 0;
  std::uint64_t full_spokes = 0;
  double distance = 0.0;
};

/// Joint timeline with nest contention. Every transit (the initial departure
/// and each return+redeparture) is delayed by congestion_delay(k) where k is
/// the number of other searchers whose transit is pending at that instant;
/// simultaneous requests contend symmetrically, ties resolved by rank.
inline CongestedOutcome run_congested_trial(const ArenaConfig& arena,
                                            const std::vector<ClusterSpec>& clusters,
                                            const SwarmConfig& swarm, std::uint64_t trial_seed) {
  const double v = swarm.searcher.speed;
  const CongestionModel& model = *swarm.congestion;
  const std::uint32_t n = swarm.n_searchers;

  struct SpokeRecord {
    double depart = 0.0;
    double duration = 0.0;
    bool hit = false;
  };
  struct SearcherState {
    std::mt19937_64 eng;
    std::uint64_t step = 0;
    double depart_at = -1.0;  // pending transit departs at this time
    bool pending = false;
    std::vector<SpokeRecord> timeline;
  };

  std::vector<SearcherState> st(n + 1);
  for (std::uint32_t s = 1; s <= n; ++s) st[s].eng = searcher_stream(trial_seed, s);

  using Request = std::pair<double, std::uint32_t>;  // (request time, rank)
  std::priority_queue<Request, std::vector<Request>, std::greater<>> queue;
  for (std::uint32_t s = 1; s <= n; ++s) queue.push({0.0, s});

  double best_time = std::numeric_limits<double>::infinity();
  std::uint32_t best_rank = 0;
  Detection best_det{};

  while (!queue.empty()) {
    const double now = queue.top().first;
    if (now >= best_time) break;
    std::vector<std::uint32_t> batch;
    while (!queue.empty() && queue.top().first == now) {
      batch.push_back(queue.top().second);
      queue.pop();
    }
    std::uint64_t pending_others = 0;
    for (std::uint32_t s = 1; s <= n; ++s)
      if (st[s].pending && st[s].depart_at > now) ++pending_others;
    const std::uint64_t contenders = pending_others + batch.size() - 1;
    const double depart = now + congestion_delay(contenders, model);

    for (std::uint32_t s : batch) {
      st[s].pending = true;
      st[s].depart_at = depart;
    }
    for (std::uint32_t s : batch) {
      SearcherState& me = st[s];
      if (me.step >= swarm.spoke_cap) throw SpokeCapError("spoke cap exceeded before discovery");
      const Angle heading = spoke_heading(s, me.step, swarm, &me.eng);
      if (auto hit = nearest_cluster_hit(heading, clusters)) {
        const double contact = depart + *hit / v;
        me.timeline.push_back({depart, *hit / v, true});
        if (contact < best_time) {
          best_time = contact;
          best_rank = s;
          best_det = Detection{contact, me.step, *hit, heading};
        }
      } else {
        const double duration = 2.0 * ray_exit_distance(heading, arena) / v;
        me.timeline.push_back({depart, duration, false});
        me.step += 1;
        const double next = depart + duration;
        if (next < best_time) queue.push({next, s});
      }
    }
  }

  CongestedOutcome out;
  out.detection = best_det;
  out.rank = best_rank;
  for (std::uint32_t s = 1; s <= n; ++s) {
    for (const auto& rec : st[s].timeline) {
      if (rec.depart >= best_time) continue;
      const double moving = std::min(rec.depart + rec.duration, best_time) - rec.depart;
      out.distance += v * moving;
      if (!rec.hit && rec.depart + rec.duration <= best_time) ++out.full_spokes;
    }
  }
  return out;
}

}  // namespace detail

/// Place a cluster of the given diameter uniformly at random over all fully
/// contained positions (rejection sampling over the feasible bounding box).
/// Deterministic for a given seed.
inline ClusterSpec place_cluster(const ArenaConfig& arena, double diameter, std::uint64_t seed,
                                 ClusterShape shape = ClusterShape::disk) {
  if (!arena.valid()) throw ConfigError("arena.extent must be > 0");
  if (!(diameter > 0.0)) throw ConfigError("cluster.diameter must be > 0");
  // feasibility: circumscribed diameter in a circle arena, per-axis half-extent
  // in a square arena (a square cluster's side only has to fit the square)
  const double half = (shape == ClusterShape::disk) ? diameter / 2.0
                                                    : diameter / (2.0 * std::numbers::sqrt2);
  const bool fits = arena.shape == ArenaShape::circle ? diameter <= 2.0 * arena.extent
                                                      : half <= arena.extent;
  if (!fits) throw ConfigError("cluster too large to fit in the arena");

  ClusterSpec spec;
  spec.diameter = diameter;
  spec.shape = shape;
  const bool centered_only =
      arena.shape == ArenaShape::circle ? diameter >= 2.0 * arena.extent : half >= arena.extent;
  if (centered_only) return spec;  // unique feasible position: centered on the nest
  const double box = arena.extent - half;

  std::mt19937_64 eng(seed);
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    const double x = (2.0 * uniform01(eng) - 1.0) * box;
    const double y = (2.0 * uniform01(eng) - 1.0) * box;
    spec.bearing = Angle(std::atan2(y, x));
    spec.distance = std::hypot(x, y);
    if (detail::cluster_inside_arena(arena, spec)) return spec;
  }
  throw ConfigError("cluster placement rejection sampling did not converge");
}

/// One full foraging trial: all searchers run their schedules, the trial stops
/// at the first cluster contact (ties to the lowest rank). Without congestion
/// the result is the closed-form minimum over searcher_detection_time.
inline TrialResult simulate_trial(const ArenaConfig& arena, const std::vector<ClusterSpec>& clusters,
                                  const SwarmConfig& swarm, std::uint64_t seed) {
  detail::validate_trial_config(arena, clusters, swarm);
  const double v = swarm.searcher.speed;
  const std::uint32_t n = swarm.n_searchers;

  TrialResult result;
  if (swarm.congestion) {
    auto out = detail::run_congested_trial(arena, clusters, swarm, seed);
    result.discovery_time = out.detection.time;
    result.discovering_searcher = out.rank;
    result.hit_spoke_index = out.detection.step;
    result.hit_angle = out.detection.angle;
    result.full_spokes_completed = out.full_spokes;
    result.distance_travelled_total = out.distance;
    return result;
  }

  std::optional<Detection> best;
  std::uint32_t best_rank = 0;
  for (std::uint32_t s = 1; s <= n; ++s) {
    auto det = searcher_detection_time(s, swarm, arena, clusters, seed);
    if (det && (!best || det->time < best->time)) {
      best = det;
      best_rank = s;
    }
  }
  result.discovery_time = best->time;
  result.discovering_searcher = best_rank;
  result.hit_spoke_index = best->step;
  result.hit_angle = best->angle;
  result.full_spokes_completed = best->step;  // discoverer's own full spokes
  for (std::uint32_t s = 1; s <= n; ++s) {
    if (s == best_rank) continue;
    result.full_spokes_completed +=
        detail::full_spokes_by(s, swarm, arena, clusters, seed, best->time);
  }
  result.distance_travelled_total = static_cast<double>(n) * v * best->time;
  return result;
}

}  // namespace goldenfa
