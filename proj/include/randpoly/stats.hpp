#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace randpoly {

// Normal-approximation 95% radius for a binomial frequency:
//   1.96 * sqrt(p (1 - p) / N).
inline double wald_radius(std::uint64_t hits, std::uint64_t trials) {
  if (trials == 0) return 0.0;
  const double p = static_cast<double>(hits) / static_cast<double>(trials);
  return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

struct Frequency {
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;

  double value() const { return trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0; }
  double radius() const { return wald_radius(hits, trials); }
};

// b exceeds a by more than the sum of both radii.
inline bool significantly_greater(const Frequency& b, const Frequency& a) {
  return b.value() - a.value() > b.radius() + a.radius();
}

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;

  double at(double x) const { return intercept + slope * x; }
};

// Ordinary least squares y ~ intercept + slope * x.
inline LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  LinearFit fit;
  const auto n = static_cast<double>(x.size());
  if (x.size() < 2) return fit;
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0) return fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

}  // namespace randpoly
