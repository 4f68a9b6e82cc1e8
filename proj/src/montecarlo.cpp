#include "ubc/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>
#include <vector>

#include "ubc/errors.hpp"

namespace ubc {

namespace {

constexpr double kZ95 = 1.959963984540054;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  void add(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct BlockSums {
  CompensatedSum err1;
  CompensatedSum err1_sq;
  CompensatedSum err2;
  CompensatedSum err2_sq;
  CompensatedSum power;
};

BlockSums run_block(const Problem& problem, const SimulationConfig& config, const MmseCoefficients& gains,
                    SourceSign sign, std::uint64_t block, std::uint64_t count) {
  SampleStream stream(config.seed, block);
  const double alpha = config.coeffs.alpha;
  const double beta = config.coeffs.beta;
  const double sd1 = std::sqrt(problem.n1());
  const double sd2 = std::sqrt(problem.n2());
  const bool negate = sign == SourceSign::negated_s1;

  BlockSums sums;
  for (std::uint64_t k = 0; k < count; ++k) {
    auto [v, s2] = stream.source_pair(problem.sigma2(), problem.rho());
    const auto [g1, g2] = stream.normal_pair();
    const double s1 = negate ? -v : v;
    const double enc_s1 = negate ? -s1 : s1;

    const double x = gains.gamma * (alpha * enc_s1 + beta * s2);
    const double y1 = x + sd1 * g1;
    const double y2 = x + sd2 * g2;
    const double est1 = negate ? -(gains.c1 * y1) : gains.c1 * y1;
    const double est2 = gains.c2 * y2;

    const double e1 = (s1 - est1) * (s1 - est1);
    const double e2 = (s2 - est2) * (s2 - est2);
    sums.err1.add(e1);
    sums.err1_sq.add(e1 * e1);
    sums.err2.add(e2);
    sums.err2_sq.add(e2 * e2);
    sums.power.add(x * x);
  }
  return sums;
}

double half_width(double sum, double sum_sq, std::uint64_t n) {
  if (n < 2) return std::numeric_limits<double>::infinity();
  const double nd = static_cast<double>(n);
  const double mean = sum / nd;
  const double var = std::max(0.0, (sum_sq - nd * mean * mean) / (nd - 1.0));
  return kZ95 * std::sqrt(var / nd);
}

std::string g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  engine_.seed(seq);
}

double SampleStream::uniform() { return static_cast<double>((engine_() >> 11) + 1) * 0x1p-53; }

std::pair<double, double> SampleStream::normal_pair() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(t), r * std::sin(t)};
}

std::pair<double, double> SampleStream::source_pair(double sigma2, double rho) {
  const auto [g1, g2] = normal_pair();
  const double sigma = std::sqrt(sigma2);
  const double s1 = sigma * g1;
  return {s1, rho * s1 + std::sqrt(1.0 - rho * rho) * sigma * g2};
}

MmseCoefficients mmse_coefficients(const Problem& problem, const UncodedCoeffs& coeffs) {
  validate_coeffs(coeffs);
  const double a = coeffs.alpha;
  const double b = coeffs.beta;
  const double rho = problem.rho();
  const double q = a * a + 2.0 * a * b * rho + b * b;
  if (!(q > 0.0)) throw InvalidArgument("degenerate coefficients: alpha^2 + 2 alpha beta rho + beta^2 = 0");
  const double gamma = std::sqrt(problem.power() / (problem.sigma2() * q));
  // Cov(S_i, Y_i) / Var(Y_i), with Var(Y_i) = P + N_i by the power normalization.
  return {gamma, gamma * problem.sigma2() * (a + b * rho) / (problem.power() + problem.n1()),
          gamma * problem.sigma2() * (b + a * rho) / (problem.power() + problem.n2())};
}

DistortionPair mmse_implied_distortions(const Problem& problem, const MmseCoefficients& gains) {
  return {problem.sigma2() - gains.c1 * gains.c1 * (problem.power() + problem.n1()),
          problem.sigma2() - gains.c2 * gains.c2 * (problem.power() + problem.n2())};
}

SimulationReport simulate(const Problem& problem, const SimulationConfig& config, SourceSign sign) {
  return simulate_with_gains(problem, config, mmse_coefficients(problem, config.coeffs), sign);
}

SimulationReport simulate_with_gains(const Problem& problem, const SimulationConfig& config,
                                     const MmseCoefficients& gains, SourceSign sign) {
  validate_coeffs(config.coeffs);
  if (config.samples < 1) throw InvalidArgument("samples must be >= 1");

  const std::uint64_t n = config.samples;
  const std::uint64_t blocks = (n + kBlockSize - 1) / kBlockSize;
  std::vector<BlockSums> partial(blocks);

  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      const std::uint64_t count = std::min(kBlockSize, n - b * kBlockSize);
      partial[b] = run_block(problem, config, gains, sign, b, count);
    }
  };
  const auto threads = std::min<std::uint64_t>(blocks, std::max(1u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (std::uint64_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  BlockSums total;
  for (const auto& p : partial) {
    total.err1.add(p.err1);
    total.err1_sq.add(p.err1_sq);
    total.err2.add(p.err2);
    total.err2_sq.add(p.err2_sq);
    total.power.add(p.power);
  }

  const double nd = static_cast<double>(n);
  SimulationReport report;
  report.empirical_d1 = total.err1.value() / nd;
  report.empirical_d2 = total.err2.value() / nd;
  report.empirical_power = total.power.value() / nd;
  report.ci_half_width_d1 = half_width(total.err1.value(), total.err1_sq.value(), n);
  report.ci_half_width_d2 = half_width(total.err2.value(), total.err2_sq.value(), n);
  report.samples = n;
  report.seed = config.seed;
  return report;
}

bool power_check(const SimulationReport& report, const ChannelParams& channel, double tol_rel) {
  return report.empirical_power <= channel.power * (1.0 + tol_rel);
}

std::string to_key_values(const SimulationReport& r) {
  std::ostringstream out;
  out << "empirical_d1=" << g17(r.empirical_d1) << '\n'
      << "empirical_d2=" << g17(r.empirical_d2) << '\n'
      << "empirical_power=" << g17(r.empirical_power) << '\n'
      << "ci_half_width_d1=" << g17(r.ci_half_width_d1) << '\n'
      << "ci_half_width_d2=" << g17(r.ci_half_width_d2) << '\n'
      << "samples=" << r.samples << '\n'
      << "seed=" << r.seed << '\n';
  return out.str();
}

}  // namespace ubc
