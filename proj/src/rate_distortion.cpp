#include "ubc/rate_distortion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ubc/closed_forms.hpp"
#include "ubc/errors.hpp"
#include "ubc/numeric.hpp"

namespace ubc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kHalfPi = std::numbers::pi / 2.0;

// Bracket width for each golden-section level, relative to sigma^2.
constexpr double kGoldenTolerance = 1e-10;

double half_log2(double x) { return 0.5 * std::log2(x); }

// Distortion d = sigma^2 sin^2(phi). In these coordinates the 2x2 condition
// "some e makes 0 <= K_E <= K_S" reads |phi1 - phi2| <= acos(rho).
double angle_of(double d, double sigma2) { return std::asin(std::sqrt(std::clamp(d / sigma2, 0.0, 1.0))); }
double distortion_at(double phi, double sigma2) {
  const double s = std::sin(std::clamp(phi, 0.0, kHalfPi));
  return sigma2 * s * s;
}

struct Interval {
  double lo;
  double hi;
};

// Range of d2 compatible with d1, intersected with (0, cap].
Interval partner_range(double d1, double cap, double sigma2, double theta) {
  const double phi1 = angle_of(d1, sigma2);
  return {distortion_at(phi1 - theta, sigma2), std::min(cap, distortion_at(phi1 + theta, sigma2))};
}

// Range of the cross term e for which K_E >= 0 and K_S - K_E >= 0.
Interval cross_range(double d1, double d2, double sigma2, double rho) {
  const double outer = std::sqrt(std::max(0.0, (sigma2 - d1) * (sigma2 - d2)));
  const double inner = std::sqrt(d1 * d2);
  return {std::max(rho * sigma2 - outer, -inner), std::min(rho * sigma2 + outer, inner)};
}

double log_det(double d1, double d2, double e) {
  const double det = d1 * d2 - e * e;
  return det > 0.0 ? std::log(det) : kNegInf;
}

}  // namespace

double conditional_variance(const SourceParams& source) { return source.sigma2 * (1.0 - source.rho * source.rho); }

RateValue r_scalar(double variance, double delta) {
  if (!(variance > 0.0)) throw OutOfRange("variance must be > 0");
  if (!(delta > 0.0)) throw OutOfRange("delta must be > 0");
  return {std::max(0.0, half_log2(variance / delta))};
}

RateValue r_conditional(const SourceParams& source, double delta1) {
  validate_source(source);
  const double cond = conditional_variance(source);
  if (!(delta1 > 0.0 && delta1 <= cond)) throw OutOfRange("delta1 must lie in (0, sigma2 (1 - rho^2)]");
  return {half_log2(cond / delta1)};
}

RateValue channel_capacity(double power, double noise) {
  if (!(power >= 0.0)) throw OutOfRange("power must be >= 0");
  if (!(noise > 0.0)) throw OutOfRange("noise must be > 0");
  return {0.5 * std::log1p(power / noise) / std::numbers::ln2};
}

RateValue r_joint_numeric(const SourceParams& source, double delta1, double delta2) {
  validate_source(source);
  const double s2 = source.sigma2;
  const double rho = source.rho;
  if (!(delta1 > 0.0 && delta1 <= s2)) throw OutOfRange("delta1 must lie in (0, sigma2]");
  if (!(delta2 > 0.0 && delta2 <= s2)) throw OutOfRange("delta2 must lie in (0, sigma2]");

  const double theta = std::acos(rho);
  const double tol = kGoldenTolerance * s2;

  auto best_over_e = [&](double d1, double d2) {
    const auto [lo, hi] = cross_range(d1, d2, s2, rho);
    if (lo > hi) return kNegInf;
    return numeric::golden_section_maximize([&](double e) { return log_det(d1, d2, e); }, lo, hi, tol).value;
  };
  auto best_over_d2 = [&](double d1) {
    const auto [lo, hi] = partner_range(d1, delta2, s2, theta);
    if (lo > hi) return kNegInf;
    return numeric::golden_section_maximize([&](double d2) { return best_over_e(d1, d2); }, lo, hi, tol).value;
  };

  // d1 beyond this leaves no admissible d2 <= delta2.
  const double d1_cap = std::min(delta1, distortion_at(angle_of(delta2, s2) + theta, s2));
  const double best = numeric::golden_section_maximize(best_over_d2, 0.0, d1_cap, tol).value;

  const double log_det_source = std::log(s2 * s2 * (1.0 - rho * rho));
  return {std::max(0.0, 0.5 * (log_det_source - best) / std::numbers::ln2)};
}

RateValue lemma3_bound(const Problem& problem, double delta2) {
  // (P + N2) delta2 / sigma^2 - N2 = (P + N2) (delta2 - D2_min) / sigma^2,
  // so the log argument is 1 + excess and vanishes exactly at D2_min.
  const double excess = (problem.power() + problem.n2()) * (delta2 - d_min(problem, Receiver::two)) /
                        (problem.sigma2() * problem.n1());
  if (!(excess > -1.0)) throw DomainError("delta2 is below the single-user minimum distortion");
  return {0.5 * std::log1p(excess) / std::numbers::ln2};
}

double receiver1_d2_lower(const Problem& problem, double cond_d1) {
  const double cond = conditional_variance(problem.source());
  if (!(cond_d1 > 0.0 && cond_d1 <= cond)) throw OutOfRange("conditional d1 must lie in (0, sigma2 (1 - rho^2)]");
  // N2 + N1 (cond / cond_d1 - 1) == sigma^2 (1 - rho^2) N1 / cond_d1 + N2 - N1
  const double inner = problem.n2() + problem.n1() * (cond / cond_d1 - 1.0);
  return problem.sigma2() * inner / (problem.n2() + problem.power());
}

}  // namespace ubc
