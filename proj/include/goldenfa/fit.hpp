#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace goldenfa {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope*x + intercept.
inline LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("linear_fit requires >= 2 paired points");
  const auto n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("linear_fit: all x values are equal");

  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
    ss_res += r * r;
  }
  fit.r_squared = syy == 0.0 ? (ss_res == 0.0 ? 1.0 : 0.0) : 1.0 - ss_res / syy;
  return fit;
}

/// Least squares of mean-time against 1/x, for 1/Delta and 1/N scaling
/// checks. Points are (x, mean_time) with x > 0 and distinct.
inline LinearFit fit_inverse_scaling(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw std::invalid_argument("fit_inverse_scaling requires >= 3 points");
  std::vector<double> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& [x, y] : points) {
    if (x == 0.0) throw std::invalid_argument("fit_inverse_scaling requires nonzero x");
    xs.push_back(1.0 / x);
    ys.push_back(y);
  }
  return linear_fit(xs, ys);
}

}  // namespace goldenfa
