#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "goldenfa/angle.hpp"

namespace goldenfa {

enum class ArenaShape { circle, square };

/// Search region centered on the nest: a circle of radius `extent` or an
/// axis-aligned square of half-width `extent`.
struct ArenaConfig {
  ArenaShape shape = ArenaShape::circle;
  double extent = 50.0;  // meters: radius R (circle) or half-width w (square)

  [[nodiscard]] bool valid() const noexcept { return extent > 0.0; }
};

/// Half the angular width of a disk of diameter `diameter` at distance
/// `distance`, as seen from the nest: arcsin(diameter / (2*distance)),
/// clamped to pi/2 once the nest touches or enters the disk.
inline Angle cluster_half_angle(double distance, double diameter) {
  if (!(distance > 0.0)) throw std::invalid_argument("cluster_half_angle requires distance > 0");
  if (diameter < 0.0) throw std::invalid_argument("cluster_half_angle requires diameter >= 0");
  const double ratio = diameter / (2.0 * distance);
  if (ratio >= 1.0) return Angle(std::numbers::pi / 2.0);
  return Angle(std::asin(ratio));
}

/// Distance from the nest to the first intersection of the ray at `theta`
/// with a disk of diameter `diameter` centered at polar (bearing, distance).
/// Returns nullopt if the ray misses. A nest inside the disk hits at 0.
inline std::optional<double> ray_hits_disk(Angle theta, Angle bearing, double distance,
                                           double diameter) {
  if (!(distance > 0.0)) throw std::invalid_argument("ray_hits_disk requires distance > 0");
  const double radius = diameter / 2.0;
  if (distance <= radius) return 0.0;
  const double delta = theta.circular_distance_to(bearing);
  if (delta > std::numbers::pi / 2.0) return std::nullopt;
  const double off_axis = distance * std::sin(delta);
  if (off_axis > radius) return std::nullopt;
  const double chord = std::sqrt(std::max(0.0, radius * radius - off_axis * off_axis));
  return std::max(0.0, distance * std::cos(delta) - chord);
}

/// Distance from the nest to the arena boundary along `theta`.
inline double ray_exit_distance(Angle theta, const ArenaConfig& arena) {
  if (arena.shape == ArenaShape::circle) return arena.extent;
  const double c = std::fabs(std::cos(theta.value()));
  const double s = std::fabs(std::sin(theta.value()));
  return arena.extent / std::max(c, s);
}

/// Distance from the nest to the first intersection of the ray at `theta`
/// with an axis-aligned square of side `side` centered at polar
/// (bearing, distance). Slab method; nullopt on a miss, 0 if the nest is
/// inside the square.
inline std::optional<double> ray_hits_square(Angle theta, Angle bearing, double distance,
                                             double side) {
  if (!(distance > 0.0)) throw std::invalid_argument("ray_hits_square requires distance > 0");
  const double half = side / 2.0;
  const double cx = distance * std::cos(bearing.value());
  const double cy = distance * std::sin(bearing.value());
  const double dx = std::cos(theta.value());
  const double dy = std::sin(theta.value());

  double tmin = 0.0;
  double tmax = std::numeric_limits<double>::infinity();
  const double lo[2] = {cx - half, cy - half};
  const double hi[2] = {cx + half, cy + half};
  const double dir[2] = {dx, dy};
  for (int axis = 0; axis < 2; ++axis) {
    if (dir[axis] == 0.0) {
      if (0.0 < lo[axis] || 0.0 > hi[axis]) return std::nullopt;
    } else {
      double t1 = lo[axis] / dir[axis];
      double t2 = hi[axis] / dir[axis];
      if (t1 > t2) std::swap(t1, t2);
      tmin = std::max(tmin, t1);
      tmax = std::min(tmax, t2);
      if (tmin > tmax) return std::nullopt;
    }
  }
  return tmin;
}

}  // namespace goldenfa
