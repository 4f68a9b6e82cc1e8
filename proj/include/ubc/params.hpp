#pragma once

// Parameter records shared by every module, and the two problem
// equivalences (sign of the correlation, per-component variance scaling)
// used to bring arbitrary inputs into canonical form.

namespace ubc {

/// Bivariate Gaussian source with common variance `sigma2` and correlation
/// `rho`. Canonical form requires 0 <= rho < 1.
struct SourceParams {
  double sigma2 = 1.0;
  double rho = 0.0;

  friend bool operator==(const SourceParams&, const SourceParams&) = default;
};

/// One-to-two AWGN broadcast channel: transmit power and the two noise
/// variances, with the first receiver strictly less noisy.
struct ChannelParams {
  double power = 1.0;
  double n1 = 1.0;
  double n2 = 2.0;

  friend bool operator==(const ChannelParams&, const ChannelParams&) = default;
};

/// Mixing pair of the uncoded encoder X = gamma * (alpha*S1 + beta*S2).
struct UncodedCoeffs {
  double alpha = 0.5;
  double beta = 0.5;

  /// The (alpha, 1 - alpha) parametrization used everywhere outside tests.
  static UncodedCoeffs from_alpha(double alpha) { return {alpha, 1.0 - alpha}; }

  friend bool operator==(const UncodedCoeffs&, const UncodedCoeffs&) = default;
};

/// Expected squared-error pair (Receiver 1, Receiver 2).
struct DistortionPair {
  double d1 = 0.0;
  double d2 = 0.0;

  friend bool operator==(const DistortionPair&, const DistortionPair&) = default;
};

/// A validated (source, channel) pair. Only obtainable through
/// validate_problem, so holding one certifies every invariant.
class Problem {
 public:
  const SourceParams& source() const noexcept { return source_; }
  const ChannelParams& channel() const noexcept { return channel_; }

  double sigma2() const noexcept { return source_.sigma2; }
  double rho() const noexcept { return source_.rho; }
  double power() const noexcept { return channel_.power; }
  double n1() const noexcept { return channel_.n1; }
  double n2() const noexcept { return channel_.n2; }

  /// P / N1, the SNR on the stronger link.
  double snr1() const noexcept { return channel_.power / channel_.n1; }

 private:
  friend Problem validate_problem(const SourceParams&, const ChannelParams&);
  Problem(SourceParams s, ChannelParams c) : source_(s), channel_(c) {}

  SourceParams source_;
  ChannelParams channel_;
};

/// Throws InvalidArgument naming the first violated invariant
/// (e.g. "n1 must be < n2").
Problem validate_problem(const SourceParams& source, const ChannelParams& channel);

/// Source-only check, same messages as validate_problem.
void validate_source(const SourceParams& source);

/// Throws InvalidArgument unless alpha >= 0, beta >= 0 and alpha + beta > 0.
void validate_coeffs(const UncodedCoeffs& coeffs);

/// Result of folding a negative correlation into canonical form.
struct SignNormalizedSource {
  SourceParams source;
  /// Encoder must see -S1 and Receiver 1 must negate its estimate.
  bool flip_s1 = false;

  friend bool operator==(const SignNormalizedSource&, const SignNormalizedSource&) = default;
};

/// rho -> |rho|, recording whether S1 has to be negated. Identity for
/// rho >= 0. Applying it to its own output is a no-op.
SignNormalizedSource negate_rho_transform(const SourceParams& raw);

/// (D1, D2, sigma1^2, sigma2^2) for a source whose components may have
/// different variances.
struct VarianceTuple {
  double d1 = 0.0;
  double d2 = 0.0;
  double var1 = 1.0;
  double var2 = 1.0;

  friend bool operator==(const VarianceTuple&, const VarianceTuple&) = default;
};

/// (D1, D2, s1, s2) -> (a1*D1, a2*D2, a1*s1, a2*s2). Achievability is
/// preserved in both directions. Throws InvalidArgument on a non-positive
/// factor.
VarianceTuple scale_variance_transform(const VarianceTuple& t, double a1, double a2);

}  // namespace ubc
