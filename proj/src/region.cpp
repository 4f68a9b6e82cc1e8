#include "ubc/region.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include "ubc/errors.hpp"
#include "ubc/rate_distortion.hpp"

namespace ubc {

std::vector<BoundaryPoint> trace_uncoded_boundary(const Problem& problem, std::size_t num_points) {
  if (num_points < 2) throw InvalidArgument("points must be >= 2");

  const double corner = d1_star_at_d2min(problem);
  std::vector<BoundaryPoint> trace;
  trace.reserve(num_points);
  for (std::size_t i = 0; i < num_points; ++i) {
    BoundaryPoint pt;
    pt.alpha = static_cast<double>(i) / static_cast<double>(num_points - 1);
    const auto d = uncoded_distortions(problem, UncodedCoeffs::from_alpha(pt.alpha));
    pt.d1 = d.d1;
    pt.d2_achievable = d.d2;

    // alpha = 0 is the D1*(D2_min) corner itself; the converse there is
    // excluded even if rounding puts d1 a hair below the corner value.
    const bool in_range = pt.alpha > 0.0 && pt.d1 < corner;
    if (!in_range) {
      pt.optimal_flag = true;
    } else if (is_uncoded_optimal(problem, pt.d1)) {
      pt.converse = converse_at(problem, pt.d1);
      pt.optimal_flag = true;
    }
    trace.push_back(pt);
  }
  return trace;
}

ConverseValue converse_at(const Problem& problem, double d1) {
  const BoundWitness w = witness_a_star(problem, d1);
  return {psi(problem, d1, w), w};
}

VerificationReport verify_matching(const Problem& problem, std::size_t grid_size, double tol) {
  if (grid_size < 1) throw InvalidArgument("grid must be >= 1");

  const double lo = d_min(problem, Receiver::one);
  const double hi = d1_star_at_d2min(problem);
  const double step = (hi - lo) / static_cast<double>(grid_size);
  const double abs_tol = tol * problem.sigma2();

  VerificationReport report;
  report.points.reserve(grid_size);
  for (std::size_t k = 0; k < grid_size; ++k) {
    MatchRecord rec;
    rec.d1 = lo + (static_cast<double>(k) + 0.5) * step;
    if (!is_uncoded_optimal(problem, rec.d1)) {
      report.points.push_back(rec);
      continue;
    }
    ++report.covered;
    try {
      rec.alpha = solve_alpha_for_d1(problem, rec.d1);
      rec.d2_uncoded = uncoded_distortions(problem, UncodedCoeffs::from_alpha(rec.alpha)).d2;
      const auto conv = converse_at(problem, rec.d1);
      rec.d2_converse = conv.psi;
      rec.witness = conv.witness;
      rec.residual = std::abs(rec.d2_uncoded - rec.d2_converse);
      const bool ok = rec.residual <= abs_tol && rec.witness.a1 >= 0.0 && rec.witness.a2 >= 0.0;
      rec.status = ok ? MatchStatus::pass : MatchStatus::fail;
    } catch (const std::exception&) {
      rec.residual = std::numeric_limits<double>::infinity();
      rec.status = MatchStatus::fail;
    }
    report.max_residual = std::max(report.max_residual, rec.residual);
    if (rec.status == MatchStatus::fail) ++report.failures;
    report.points.push_back(rec);
  }
  report.passed = report.covered > 0 && report.failures == 0;
  return report;
}

RateConsistencyReport check_rate_consistency(const Problem& problem, std::size_t grid_size, double tol_bits) {
  if (grid_size < 1) throw InvalidArgument("grid must be >= 1");

  const double lo = d_min(problem, Receiver::one);
  const double hi = d1_star_at_d2min(problem);
  const double step = (hi - lo) / static_cast<double>(grid_size);
  const double capacity = channel_capacity(problem.power(), problem.n1()).bits;

  RateConsistencyReport report;
  for (std::size_t k = 0; k < grid_size; ++k) {
    const double d1 = lo + (static_cast<double>(k) + 0.5) * step;
    if (!is_uncoded_optimal(problem, d1)) continue;
    const double rate = r_joint_numeric(problem.source(), d1, d2_tilde_star(problem, d1)).bits;
    report.max_gap_bits = std::max(report.max_gap_bits, std::abs(rate - capacity));
    ++report.checked;
  }
  report.passed = report.checked > 0 && report.max_gap_bits <= tol_bits;
  return report;
}

}  // namespace ubc
