#include "ubc/params.hpp"

#include <cmath>

#include "ubc/errors.hpp"

namespace ubc {

namespace {

// NaN fails every comparison below, so it is rejected with the same message
// as an out-of-range value.
void require(bool ok, const char* message) {
  if (!ok) throw InvalidArgument(message);
}

}  // namespace

void validate_source(const SourceParams& source) {
  require(source.sigma2 > 0.0 && std::isfinite(source.sigma2), "sigma2 must be > 0");
  require(source.rho >= 0.0, "rho must be >= 0");
  require(source.rho < 1.0, "rho must be < 1");
}

Problem validate_problem(const SourceParams& source, const ChannelParams& channel) {
  validate_source(source);
  require(channel.power > 0.0 && std::isfinite(channel.power), "power must be > 0");
  require(channel.n1 > 0.0 && std::isfinite(channel.n1), "n1 must be > 0");
  require(channel.n2 > 0.0 && std::isfinite(channel.n2), "n2 must be > 0");
  require(channel.n1 < channel.n2, "n1 must be < n2");
  return Problem(source, channel);
}

void validate_coeffs(const UncodedCoeffs& coeffs) {
  require(coeffs.alpha >= 0.0 && std::isfinite(coeffs.alpha), "alpha must be >= 0");
  require(coeffs.beta >= 0.0 && std::isfinite(coeffs.beta), "beta must be >= 0");
  require(coeffs.alpha + coeffs.beta > 0.0, "alpha + beta must be > 0");
}

SignNormalizedSource negate_rho_transform(const SourceParams& raw) {
  if (raw.rho < 0.0) return {{raw.sigma2, -raw.rho}, true};
  return {raw, false};
}

VarianceTuple scale_variance_transform(const VarianceTuple& t, double a1, double a2) {
  require(a1 > 0.0 && std::isfinite(a1), "scale factor a1 must be > 0");
  require(a2 > 0.0 && std::isfinite(a2), "scale factor a2 must be > 0");
  return {a1 * t.d1, a2 * t.d2, a1 * t.var1, a2 * t.var2};
}

}  // namespace ubc
