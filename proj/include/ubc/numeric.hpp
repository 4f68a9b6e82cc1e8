#pragma once

// Derivative-free one-dimensional solvers.

#include <cmath>
#include <cstddef>
#include <utility>

namespace ubc::numeric {

struct BisectionResult {
  double x = 0.0;
  double residual = 0.0;  // f(x) - target
  std::size_t iterations = 0;
};

/// Solves f(x) = target on [lo, hi] for f monotone (either direction) with
/// the root bracketed. Stops as soon as |f(x) - target| <= tol, when the
/// bracket can no longer be split in floating point, or after max_iter
/// halvings. The caller checks the returned residual.
template <typename F>
BisectionResult bisect(F&& f, double target, double lo, double hi, double tol,
                       std::size_t max_iter = 200) {
  double f_lo = f(lo) - target;
  if (std::abs(f_lo) <= tol) return {lo, f_lo, 0};
  double f_hi = f(hi) - target;
  if (std::abs(f_hi) <= tol) return {hi, f_hi, 0};

  const bool lo_negative = f_lo < 0.0;
  BisectionResult best = std::abs(f_lo) < std::abs(f_hi) ? BisectionResult{lo, f_lo, 0}
                                                          : BisectionResult{hi, f_hi, 0};
  for (std::size_t it = 1; it <= max_iter; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid) - target;
    if (std::abs(f_mid) < std::abs(best.residual)) best = {mid, f_mid, it};
    best.iterations = it;
    if (std::abs(f_mid) <= tol) return {mid, f_mid, it};
    if ((f_mid < 0.0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return best;
}

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
};

/// Maximizes a unimodal f on [lo, hi] by golden-section search until the
/// bracket is narrower than tol. Endpoints are compared against the interior
/// optimum, so maxima sitting on the boundary are found exactly.
template <typename F>
GoldenResult golden_section_maximize(F&& f, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
  const double a0 = lo;
  const double b0 = hi;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
    if (!(c < d)) break;
  }
  GoldenResult best = fc >= fd ? GoldenResult{c, fc} : GoldenResult{d, fd};
  for (double x : {a0, b0}) {
    const double fx = f(x);
    if (fx > best.value) best = {x, fx};
  }
  return best;
}

}  // namespace ubc::numeric
