#pragma once

// Seeded Monte-Carlo simulation of the uncoded scheme.
//
// Random numbers: std::mt19937_64 seeded per block through
// std::seed_seq{seed_lo, seed_hi, block_lo, block_hi} (32-bit halves).
// Uniforms are (u >> 11 + 1) * 2^-53 in (0, 1]; Gaussians come in pairs from
// the basic Box-Muller transform (sqrt(-2 ln u1) cos/sin(2 pi u2)). Both the
// engine and seed_seq are fully specified by the standard, so a given
// (seed, samples) reproduces bit for bit on one platform and libm.
//
// The sample range is cut into fixed blocks of kBlockSize symbols. Each block
// is simulated independently from its own substream and the per-block
// compensated sums are reduced in block order, so the report does not depend
// on how many threads ran.

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "ubc/params.hpp"

namespace ubc {

inline constexpr std::uint64_t kBlockSize = std::uint64_t{1} << 16;

struct SimulationConfig {
  std::uint64_t samples = 200000;
  std::uint64_t seed = 1;
  UncodedCoeffs coeffs;
};

struct SimulationReport {
  double empirical_d1 = 0.0;
  double empirical_d2 = 0.0;
  double empirical_power = 0.0;
  // 95% normal-approximation half-widths; +inf with a single sample.
  double ci_half_width_d1 = 0.0;
  double ci_half_width_d2 = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const SimulationReport&, const SimulationReport&) = default;
};

/// Encoder gain gamma and the scalar MMSE gains of both receivers.
struct MmseCoefficients {
  double gamma = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

MmseCoefficients mmse_coefficients(const Problem& problem, const UncodedCoeffs& coeffs);

/// sigma^2 - c_i^2 (P + N_i), the distortion implied by the gains.
DistortionPair mmse_implied_distortions(const Problem& problem, const MmseCoefficients& gains);

/// Whether S1 is fed to the scheme as is, or as the negated component of a
/// source with correlation -rho (encoder sees -S1, Receiver 1 negates its
/// estimate).
enum class SourceSign { canonical, negated_s1 };

/// Runs the uncoded scheme with MMSE decoding. Parallel over blocks;
/// deterministic in (problem, config, sign).
SimulationReport simulate(const Problem& problem, const SimulationConfig& config,
                          SourceSign sign = SourceSign::canonical);

/// As simulate, but decoding with caller-supplied gains.
SimulationReport simulate_with_gains(const Problem& problem, const SimulationConfig& config,
                                     const MmseCoefficients& gains, SourceSign sign = SourceSign::canonical);

/// empirical_power <= P (1 + tol_rel).
bool power_check(const SimulationReport& report, const ChannelParams& channel, double tol_rel);

/// key=value lines, floats with 17 significant digits.
std::string to_key_values(const SimulationReport& report);

/// Random stream of one simulation block.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t block);

  /// Uniform in (0, 1].
  double uniform();

  /// Two independent standard normals.
  std::pair<double, double> normal_pair();

  /// One (S1, S2) draw: S1 = sigma g1, S2 = rho S1 + sqrt(1 - rho^2) sigma g2.
  std::pair<double, double> source_pair(double sigma2, double rho);

 private:
  std::mt19937_64 engine_;
};

}  // namespace ubc
