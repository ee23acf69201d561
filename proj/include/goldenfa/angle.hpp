#pragma once

#include <cmath>
#include <compare>
#include <numbers>

namespace goldenfa {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Golden ratio (1+sqrt(5))/2, the spoke increment used by the golden scheduler.
inline constexpr double golden_ratio = 1.6180339887498948482;

/// Canonical golden angle 2*pi*(1 - 1/phi), offered as an alternative increment.
inline constexpr double golden_angle = two_pi * (2.0 - golden_ratio);

/// Reduce any radian value into [0, 2*pi).
inline double normalize_angle(double radians) noexcept {
  double r = std::fmod(radians, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;  // fmod/rounding can land exactly on 2*pi
  return r;
}

/// An angle in radians, always normalized to [0, 2*pi).
class Angle {
 public:
  constexpr Angle() noexcept = default;
  explicit Angle(double radians) noexcept : value_(normalize_angle(radians)) {}

  [[nodiscard]] double value() const noexcept { return value_; }

  [[nodiscard]] Angle operator+(Angle rhs) const noexcept {
    return Angle(value_ + rhs.value_);
  }
  [[nodiscard]] Angle operator-(Angle rhs) const noexcept {
    return Angle(value_ - rhs.value_);
  }
  [[nodiscard]] auto operator<=>(const Angle&) const noexcept = default;

  /// Shorter arc between two angles, in [0, pi].
  [[nodiscard]] double circular_distance_to(Angle other) const noexcept {
    double d = std::fabs(value_ - other.value_);
    return d > std::numbers::pi ? two_pi - d : d;
  }

 private:
  double value_ = 0.0;
};

inline double circular_distance(double a, double b) noexcept {
  return Angle(a).circular_distance_to(Angle(b));
}

}  // namespace goldenfa
