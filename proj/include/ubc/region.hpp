#pragma once

// Distortion-region boundary: the curve traced by the uncoded scheme, the
// converse curve at the optimal witness, and a checker that the two agree
// wherever the SNR threshold condition holds.

#include <cstddef>
#include <optional>
#include <vector>

#include "ubc/closed_forms.hpp"
#include "ubc/params.hpp"

namespace ubc {

/// Default residual tolerance of the matching check, in units of sigma^2.
inline constexpr double kMatchTolerance = 1e-9;

struct ConverseValue {
  double psi = 0.0;
  BoundWitness witness;
};

struct BoundaryPoint {
  double alpha = 0.0;
  double d1 = 0.0;
  double d2_achievable = 0.0;
  /// Absent where the converse bound is not defined (d1 at or above
  /// D1*(D2_min), or P/N1 above the threshold).
  std::optional<ConverseValue> converse;
  /// True when the uncoded point is known to lie on the region boundary:
  /// the threshold condition holds, or d1 is at or above D1*(D2_min) where
  /// uncoded transmission is always optimal.
  bool optimal_flag = false;
};

/// num_points values of alpha spread uniformly over [0, 1], in increasing
/// alpha (hence decreasing d1). Throws InvalidArgument for num_points < 2.
std::vector<BoundaryPoint> trace_uncoded_boundary(const Problem& problem, std::size_t num_points);

/// Psi at the optimal witness. Throws PreconditionError (range or threshold).
ConverseValue converse_at(const Problem& problem, double d1);

enum class MatchStatus { pass, fail, not_covered };

struct MatchRecord {
  double d1 = 0.0;
  MatchStatus status = MatchStatus::not_covered;
  double alpha = 0.0;
  double d2_uncoded = 0.0;
  double d2_converse = 0.0;
  BoundWitness witness;
  double residual = 0.0;
};

struct VerificationReport {
  std::vector<MatchRecord> points;
  double max_residual = 0.0;
  std::size_t covered = 0;
  std::size_t failures = 0;
  /// At least one covered point, and every covered point within tolerance
  /// with a nonnegative witness.
  bool passed = false;
};

/// Compares D2u(alpha(d1)) against psi(d1, a*(d1)) at the midpoints of
/// grid_size equal cells spanning (D1_min, D1*(D2_min)). Points above the
/// threshold are recorded as not covered. tol is relative to sigma^2.
VerificationReport verify_matching(const Problem& problem, std::size_t grid_size, double tol = kMatchTolerance);

/// Tolerance on the joint rate-distortion identity, in bits.
inline constexpr double kRateTolerance = 1e-4;

struct RateConsistencyReport {
  std::size_t checked = 0;
  double max_gap_bits = 0.0;
  bool passed = false;
};

/// At the covered points of the verify_matching grid, checks that the
/// numeric joint rate-distortion function at (d1, D2~*(d1)) equals the
/// capacity of the stronger link.
RateConsistencyReport check_rate_consistency(const Problem& problem, std::size_t grid_size,
                                             double tol_bits = kRateTolerance);

}  // namespace ubc
