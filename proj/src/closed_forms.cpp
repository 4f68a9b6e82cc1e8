#include "ubc/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ubc/errors.hpp"
#include "ubc/numeric.hpp"

namespace ubc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Points at which alpha -> D1u(alpha, 1 - alpha) is sampled before solving.
constexpr int kMonotonicitySamples = 1000;

// Weights divided by the larger one, so that the rational forms see the ratio
// alpha/beta and not the scale. The forms are evaluated in extended precision
// and rounded once, which keeps rescaled inputs within a few ulps.
struct NormalizedCoeffs {
  long double a;
  long double b;
  long double q;  // a^2 + 2 a b rho + b^2
};

NormalizedCoeffs normalize(const Problem& problem, const UncodedCoeffs& coeffs) {
  validate_coeffs(coeffs);
  const long double m = std::max(coeffs.alpha, coeffs.beta);
  const long double a = coeffs.alpha / m;
  const long double b = coeffs.beta / m;
  const long double q = a * a + 2.0L * a * b * problem.rho() + b * b;
  if (!(q > 0.0L)) throw InvalidArgument("degenerate coefficients: alpha^2 + 2 alpha beta rho + beta^2 = 0");
  return {a, b, q};
}

// D1u with noise N; D2u is the same form with the roles of alpha and beta
// swapped.
double uncoded_form(const Problem& problem, double noise, long double own, long double other, long double q) {
  const long double rho = problem.rho();
  const long double p = problem.power();
  const long double n = noise;
  const long double r2 = rho * rho;
  const long double num = p * p * other * other * (1.0L - r2) +
                          p * n * (own * own + 2.0L * own * other * rho + other * other * (2.0L - r2)) + n * n * q;
  const long double den = (p + n) * (p + n) * q;
  return static_cast<double>(problem.sigma2() * num / den);
}

}  // namespace

double d_min(const Problem& problem, Receiver receiver) {
  const double n = receiver == Receiver::one ? problem.n1() : problem.n2();
  return problem.sigma2() * n / (n + problem.power());
}

double d1_star_at_d2min(const Problem& problem) {
  const double p = problem.power();
  const double n = problem.n1();
  return problem.sigma2() * (n + p * (1.0 - problem.rho() * problem.rho())) / (n + p);
}

double d2_star_at_d1min(const Problem& problem) {
  const double p = problem.power();
  const double n = problem.n2();
  return problem.sigma2() * (n + p * (1.0 - problem.rho() * problem.rho())) / (n + p);
}

DistortionPair uncoded_distortions(const Problem& problem, const UncodedCoeffs& coeffs) {
  const auto [a, b, q] = normalize(problem, coeffs);
  return {uncoded_form(problem, problem.n1(), a, b, q), uncoded_form(problem, problem.n2(), b, a, q)};
}

double uncoded_d2_with_noise(const Problem& problem, const UncodedCoeffs& coeffs, double noise) {
  if (!(noise > 0.0)) throw InvalidArgument("noise must be > 0");
  const auto [a, b, q] = normalize(problem, coeffs);
  return uncoded_form(problem, noise, b, a, q);
}

ThresholdValue gamma_threshold(const SourceParams& source, double d1) {
  validate_source(source);
  const double s2 = source.sigma2;
  if (!(d1 > 0.0)) throw OutOfRange("d1 must be > 0");
  if (d1 > s2) throw OutOfRange("d1 must be <= sigma2");
  const double cond = s2 * (1.0 - source.rho * source.rho);
  if (d1 >= cond) return {kInf};
  const double num = s2 * cond - 2.0 * d1 * cond + d1 * d1;
  return {num / (d1 * (cond - d1))};
}

double simple_threshold(const SourceParams& source) {
  validate_source(source);
  return 2.0 * source.rho / (1.0 - source.rho);
}

bool is_uncoded_optimal(const Problem& problem, double d1) {
  return problem.snr1() <= gamma_threshold(problem.source(), d1).value;
}

double solve_alpha_for_d1(const Problem& problem, double d1_target) {
  const double tol = kAlphaSolveTolerance * problem.sigma2();
  const double lo = d_min(problem, Receiver::one);
  const double hi = d1_star_at_d2min(problem);
  if (!(d1_target >= lo - tol && d1_target <= hi + tol)) {
    throw OutOfRange("d1 target " + std::to_string(d1_target) + " outside [" + std::to_string(lo) +
                     ", " + std::to_string(hi) + "]");
  }

  auto d1_of = [&](double alpha) { return uncoded_distortions(problem, UncodedCoeffs::from_alpha(alpha)).d1; };

  double prev = d1_of(0.0);
  for (int i = 1; i <= kMonotonicitySamples; ++i) {
    const double cur = d1_of(static_cast<double>(i) / kMonotonicitySamples);
    if (!(cur < prev)) throw InvariantViolation("alpha -> D1u(alpha, 1 - alpha) is not strictly decreasing");
    prev = cur;
  }

  const auto root = numeric::bisect(d1_of, d1_target, 0.0, 1.0, tol);
  if (!(std::abs(root.residual) <= tol)) {
    throw InvariantViolation("bisection for alpha did not reach the residual tolerance");
  }
  return root.x;
}

void check_converse_domain(const Problem& problem, double d1) {
  // The lower end is closed; allow the same rounding slack as the alpha
  // solver so that D1u(1, 0) itself is accepted.
  const double lo = d_min(problem, Receiver::one) - kAlphaSolveTolerance * problem.sigma2();
  const double hi = d1_star_at_d2min(problem);
  if (!(d1 >= lo && d1 < hi)) {
    throw PreconditionError(Precondition::range, "d1 must lie in [D1_min, D1*(D2_min)) = [" + std::to_string(lo) +
                                                     ", " + std::to_string(hi) + ")");
  }
  if (!is_uncoded_optimal(problem, d1)) {
    throw PreconditionError(Precondition::threshold, "P/N1 exceeds the SNR threshold Gamma(d1)");
  }
}

double d2_tilde_star(const Problem& problem, double d1) {
  check_converse_domain(problem, d1);
  const double alpha = solve_alpha_for_d1(problem, d1);
  return uncoded_d2_with_noise(problem, UncodedCoeffs::from_alpha(alpha), problem.n1());
}

double eta(const Problem& problem, double delta, const BoundWitness& w) {
  if (!w.equal_sign()) throw InvalidArgument("witness components must share a sign");
  const double s2 = problem.sigma2();
  const double d2t = d2_tilde_star(problem, delta);
  const double radicand = (s2 - delta) * (s2 - d2t);
  if (radicand < 0.0) throw DomainError("negative radicand in eta");
  return s2 - w.a1 * (s2 - delta) * (2.0 - w.a1) - w.a2 * s2 * (2.0 * problem.rho() - w.a2) +
         2.0 * w.a1 * w.a2 * std::sqrt(radicand);
}

double psi(const Problem& problem, double delta, const BoundWitness& witness) {
  const double e = eta(problem, delta, witness);
  if (!(e > 0.0)) throw DomainError("converse bound undefined: eta <= 0");
  const double s2 = problem.sigma2();
  const double r2 = problem.rho() * problem.rho();
  return s2 / (problem.power() + problem.n2()) * (s2 * (1.0 - r2) * problem.n1() / e + problem.n2() - problem.n1());
}

BoundWitness witness_a_star(const Problem& problem, double d1) {
  const double s2 = problem.sigma2();
  const double d2t = d2_tilde_star(problem, d1);
  const double root = std::sqrt((s2 - d1) * (s2 - d2t));
  BoundWitness w{((s2 - d1) * s2 - problem.rho() * s2 * root) / ((s2 - d1) * d2t),
                 (problem.rho() * s2 - root) / d2t};
  // Rounding can push an exact zero slightly negative.
  constexpr double slack = 1e-12;
  for (double* a : {&w.a1, &w.a2}) {
    if (*a < -slack) throw InvariantViolation("optimal witness has a negative component");
    if (*a < 0.0) *a = 0.0;
  }
  return w;
}

}  // namespace ubc
