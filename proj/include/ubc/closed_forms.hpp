#pragma once

// Closed-form quantities of the uncoded broadcast problem: single-user
// optima, the two corner points of the distortion region, the uncoded
// distortions, the SNR threshold below which uncoded transmission is
// optimal, and the converse functional together with its optimal witness.

#include <limits>

#include "ubc/params.hpp"

namespace ubc {

enum class Receiver { one = 1, two = 2 };

/// Combiner weights (a1, a2) of the converse bound; must share a sign.
struct BoundWitness {
  double a1 = 0.0;
  double a2 = 0.0;

  bool equal_sign() const noexcept { return a1 * a2 >= 0.0; }

  friend bool operator==(const BoundWitness&, const BoundWitness&) = default;
};

/// Extended nonnegative SNR value. +infinity is the IEEE infinity.
struct ThresholdValue {
  double value = 0.0;

  bool is_infinite() const noexcept { return value == std::numeric_limits<double>::infinity(); }
};

/// sigma^2 N_i / (N_i + P).
double d_min(const Problem& problem, Receiver receiver);

/// D1*(D2_min) = sigma^2 (N1 + P(1 - rho^2)) / (N1 + P), reached by sending S2.
double d1_star_at_d2min(const Problem& problem);

/// D2*(D1_min) = sigma^2 (N2 + P(1 - rho^2)) / (N2 + P), reached by sending S1.
double d2_star_at_d1min(const Problem& problem);

/// Distortions of the power-normalized linear encoder followed by scalar
/// MMSE decoding. Depends on (alpha, beta) only through their ratio.
DistortionPair uncoded_distortions(const Problem& problem, const UncodedCoeffs& coeffs);

/// Same rational form as D2u but with Receiver 2's noise replaced by
/// `noise`. With noise = N1 this is the distortion of estimating S2 from
/// Receiver 1's observation.
double uncoded_d2_with_noise(const Problem& problem, const UncodedCoeffs& coeffs, double noise);

/// Gamma(d1, sigma^2, rho); +infinity once d1 >= sigma^2 (1 - rho^2).
/// Requires 0 < d1 <= sigma^2.
ThresholdValue gamma_threshold(const SourceParams& source, double d1);

/// 2 rho / (1 - rho): the minimum of gamma_threshold over d1.
double simple_threshold(const SourceParams& source);

/// P/N1 <= Gamma(d1).
bool is_uncoded_optimal(const Problem& problem, double d1);

/// Absolute residual tolerance of solve_alpha_for_d1, in units of sigma^2.
inline constexpr double kAlphaSolveTolerance = 1e-12;

/// alpha in [0, 1] with D1u(alpha, 1 - alpha) = d1_target. The map is
/// verified to be strictly decreasing before bisecting; a non-monotone map
/// raises InvariantViolation. Throws OutOfRange outside
/// [d_min(1), d1_star_at_d2min].
double solve_alpha_for_d1(const Problem& problem, double d1_target);

/// Least distortion on S2 achievable at Receiver 1 while Receiver 1 reaches
/// d1 on S1. Defined for d_min(1) <= d1 < d1_star_at_d2min with P/N1 below
/// the threshold; throws PreconditionError naming the failed side.
double d2_tilde_star(const Problem& problem, double d1);

/// Throws PreconditionError unless d2_tilde_star(d1) is defined.
void check_converse_domain(const Problem& problem, double d1);

/// Quadratic functional inside the converse bound.
double eta(const Problem& problem, double delta, const BoundWitness& witness);

/// Lower bound on D2 for any scheme reaching delta at Receiver 1. Throws
/// DomainError if eta <= 0.
double psi(const Problem& problem, double delta, const BoundWitness& witness);

/// Witness maximizing psi; both components nonnegative.
BoundWitness witness_a_star(const Problem& problem, double d1);

}  // namespace ubc
