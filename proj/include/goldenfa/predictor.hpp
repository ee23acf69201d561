#pragma once

#include <stdexcept>

namespace goldenfa {

/// Default calibration constant of the discovery-time predictor.
inline constexpr double default_predictor_constant = 32.0;

/// Predicted time to discover a cluster of diameter `delta` at distance `d`
/// for `n` searchers in an arena of radius `r`:
///   simple form  c * R*D / (N*Delta)
///   full form    c * (R/(N*Delta) + 1) * D
inline double predict_discovery_time(double r, double d, double n, double delta,
                                     double c = default_predictor_constant,
                                     bool full_form = false) {
  if (!(r > 0.0) || !(d > 0.0) || !(n > 0.0) || !(delta > 0.0) || !(c > 0.0))
    throw std::invalid_argument("predict_discovery_time requires positive inputs");
  const double simple = c * r * d / (n * delta);
  return full_form ? simple + c * d : simple;
}

/// A calibrated predictor for one arena/cluster-distance geometry. The
/// default c = 32 is a documented reference value; treat it as a fit
/// parameter when matching a particular simulation setup.
struct PredictorParams {
  double c = default_predictor_constant;  // dimensionless, > 0
  double arena_radius = 0.0;              // R, meters
  double cluster_distance = 0.0;          // D, meters

  [[nodiscard]] double evaluate(double n_searchers, double delta, bool full_form = false) const {
    return predict_discovery_time(arena_radius, cluster_distance, n_searchers, delta, c,
                                  full_form);
  }
};

}  // namespace goldenfa
