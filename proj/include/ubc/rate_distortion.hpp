#pragma once

// Rate-distortion functions and the information bounds behind the converse.
// All rates are in bits per source symbol.

#include "ubc/params.hpp"

namespace ubc {

struct RateValue {
  double bits = 0.0;
};

/// sigma^2 (1 - rho^2): variance of S1 given S2.
double conditional_variance(const SourceParams& source);

/// max(0, 1/2 log2(variance / delta)). Throws OutOfRange for delta <= 0.
RateValue r_scalar(double variance, double delta);

/// Rate of S1 when S2 is available at both encoder and decoder:
/// 1/2 log2(sigma^2 (1 - rho^2) / delta1), for 0 < delta1 <= sigma^2 (1 - rho^2).
RateValue r_conditional(const SourceParams& source, double delta1);

/// 1/2 log2(1 + P/N).
RateValue channel_capacity(double power, double noise);

/// Joint rate-distortion function of (S1, S2) seen by one encoder,
/// computed numerically: the Gaussian test channel with error covariance
///   K_E = [[d1, e], [e, d2]],  0 <= K_E <= K_S,  d1 <= delta1,  d2 <= delta2
/// that maximizes det K_E gives R = 1/2 log2(det K_S / det K_E).
/// log det is concave on this convex set, so three nested golden-section
/// searches (d1, then d2, then e) find the optimum.
RateValue r_joint_numeric(const SourceParams& source, double delta1, double delta2);

/// Upper bound on I(S1; Y1 | S2) per symbol for any scheme giving Receiver 2
/// distortion delta2:
///   1/2 log2(((P + N2) delta2 / sigma^2 - N2 + N1) / N1).
/// Throws DomainError when delta2 is below the single-user optimum.
RateValue lemma3_bound(const Problem& problem, double delta2);

/// Lower bound on Receiver 2's distortion given Receiver 1 reconstructs S1
/// with distortion cond_d1 when S2 is side information:
///   sigma^2 / (P + N2) (sigma^2 (1 - rho^2) N1 / cond_d1 + N2 - N1).
double receiver1_d2_lower(const Problem& problem, double cond_d1);

}  // namespace ubc
