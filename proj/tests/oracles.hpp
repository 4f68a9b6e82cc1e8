#pragma once

// Test-only reference computations that take a different route from the
// library: covariance algebra instead of the rational closed forms, and
// brute-force search instead of nested golden sections.

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace oracle {

struct Pair {
  double d1;
  double d2;
};

/// Linear encoder X = g w'S with E[X^2] = P on a source with covariance
/// [[v1, c], [c, v2]], c = rho sqrt(v1 v2); MMSE decoding at each receiver:
/// D_i = K_ii - Cov(S_i, X)^2 / (P + N_i).
inline Pair linear_scheme_distortions(double v1, double v2, double rho, double power, double n1, double n2,
                                      double w1, double w2) {
  const double c = rho * std::sqrt(v1 * v2);
  const double kw1 = v1 * w1 + c * w2;
  const double kw2 = c * w1 + v2 * w2;
  const double var_x = w1 * kw1 + w2 * kw2;
  const double g2 = power / var_x;
  return {v1 - g2 * kw1 * kw1 / (power + n1), v2 - g2 * kw2 * kw2 / (power + n2)};
}

/// Joint Gaussian rate-distortion function by grid search over the error
/// covariance [[d1, e], [e, d2]], with e picked in closed form (the point of
/// the feasible interval closest to zero), zooming three times around the
/// best cell.
inline double joint_rate_bruteforce(double sigma2, double rho, double delta1, double delta2) {
  auto best_det = [&](double d1, double d2) {
    const double outer = std::sqrt(std::max(0.0, (sigma2 - d1) * (sigma2 - d2)));
    const double inner = std::sqrt(d1 * d2);
    const double lo = std::max(rho * sigma2 - outer, -inner);
    const double hi = std::min(rho * sigma2 + outer, inner);
    if (lo > hi) return -1.0;
    const double e = std::clamp(0.0, lo, hi);
    return d1 * d2 - e * e;
  };
  double lo1 = 0.0, hi1 = std::min(delta1, sigma2);
  double lo2 = 0.0, hi2 = std::min(delta2, sigma2);
  double best = -1.0;
  constexpr int n = 400;
  for (int zoom = 0; zoom < 4; ++zoom) {
    double arg1 = lo1, arg2 = lo2;
    for (int i = 0; i <= n; ++i) {
      const double d1 = lo1 + (hi1 - lo1) * i / n;
      for (int j = 0; j <= n; ++j) {
        const double d2 = lo2 + (hi2 - lo2) * j / n;
        const double v = best_det(d1, d2);
        if (v > best) {
          best = v;
          arg1 = d1;
          arg2 = d2;
        }
      }
    }
    const double w1 = 4.0 * (hi1 - lo1) / n;
    const double w2 = 4.0 * (hi2 - lo2) / n;
    const double cap1 = std::min(delta1, sigma2);
    const double cap2 = std::min(delta2, sigma2);
    lo1 = std::max(0.0, arg1 - w1);
    hi1 = std::min(cap1, arg1 + w1);
    lo2 = std::max(0.0, arg2 - w2);
    hi2 = std::min(cap2, arg2 + w2);
  }
  return std::max(0.0, 0.5 * std::log2(sigma2 * sigma2 * (1.0 - rho * rho) / best));
}

/// Distance in units in the last place.
inline double ulp_distance(double a, double b) {
  if (a == b) return 0.0;
  const double ulp = std::nextafter(std::abs(a), std::numeric_limits<double>::infinity()) - std::abs(a);
  return std::abs(a - b) / ulp;
}

}  // namespace oracle
