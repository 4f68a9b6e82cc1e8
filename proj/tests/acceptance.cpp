// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ubc/cli.hpp"
#include "ubc/closed_forms.hpp"
#include "ubc/montecarlo.hpp"
#include "ubc/rate_distortion.hpp"
#include "ubc/region.hpp"

using namespace ubc;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Problem desk() { return validate_problem({1.0, 0.5}, {1.0, 1.0, 2.0}); }

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(const char* f, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Outcome corner_points() {
  std::mt19937_64 rng(2008);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double n1 = 0.01 + 5.0 * u(rng);
    const auto p = validate_problem({0.01 + 10.0 * u(rng), 0.999 * u(rng)},
                                    {0.01 + 50.0 * u(rng), n1, n1 + 0.001 + 10.0 * u(rng)});
    const double s2 = p.sigma2(), r2 = p.rho() * p.rho(), pw = p.power();
    const auto a = uncoded_distortions(p, {1.0, 0.0});
    const auto b = uncoded_distortions(p, {0.0, 1.0});
    worst = std::max({worst, rel_err(a.d1, s2 * p.n1() / (p.n1() + pw)),
                      rel_err(a.d2, s2 * (p.n2() + pw * (1.0 - r2)) / (p.n2() + pw)),
                      rel_err(b.d1, s2 * (p.n1() + pw * (1.0 - r2)) / (p.n1() + pw)),
                      rel_err(b.d2, s2 * p.n2() / (p.n2() + pw))});
  }
  return {worst <= 1e-12, fmt("max rel err %.3g (tol 1e-12)", worst)};
}

Outcome threshold_identity() {
  double worst_eq = 0.0;
  double worst_floor = 0.0;  // most negative Gamma - floor
  for (int r = 1; r <= 9; ++r) {
    const SourceParams src{1.0, r / 10.0};
    const double floor = simple_threshold(src);
    worst_eq = std::max(worst_eq, rel_err(gamma_threshold(src, 1.0 - src.rho).value, floor));
    const double cond = 1.0 - src.rho * src.rho;
    for (int k = 1; k <= 200; ++k) {
      worst_floor = std::min(worst_floor, gamma_threshold(src, cond * k / 201.0).value - floor);
    }
  }
  return {worst_eq <= 1e-12 && worst_floor >= -1e-12,
          fmt("equality rel err %.3g", worst_eq) + fmt(", min(Gamma - floor) %.3g", worst_floor)};
}

Outcome uncoded_converse_match() {
  const auto p = desk();
  const auto report = verify_matching(p, 50, 1e-9);
  bool witnesses_ok = true;
  for (const auto& pt : report.points) witnesses_ok = witnesses_ok && pt.witness.a1 >= 0.0 && pt.witness.a2 >= 0.0;
  const double alpha = solve_alpha_for_d1(p, 0.625);
  const double d2u = uncoded_distortions(p, UncodedCoeffs::from_alpha(alpha)).d2;
  const double bound = converse_at(p, 0.625).psi;
  const bool spot = std::abs(d2u - 0.75) <= 1e-9 && std::abs(bound - 0.75) <= 1e-9;
  return {report.passed && report.covered == 50 && witnesses_ok && spot,
          fmt("max residual %.3g over 50 points", report.max_residual) + fmt(", spot D2u=%.12f", d2u) +
              fmt(" Psi=%.12f", bound)};
}

Outcome witness_maximality() {
  const auto p = desk();
  const double lo = d_min(p, Receiver::one);
  const double hi = d1_star_at_d2min(p);
  double worst = -1e300;  // max of Psi(grid) - Psi(a*)
  int skipped = 0;
  for (int i = 0; i < 5; ++i) {
    const double d1 = lo + (i + 0.5) * (hi - lo) / 5.0;
    const double best = converse_at(p, d1).psi;
    for (int a = 0; a <= 100; ++a) {
      for (int b = 0; b <= 100; ++b) {
        const BoundWitness w{a / 50.0, b / 50.0};
        if (eta(p, d1, w) <= 0.0) {
          ++skipped;
          continue;
        }
        worst = std::max(worst, psi(p, d1, w) - best);
      }
    }
  }
  return {worst <= 1e-9, fmt("max Psi(grid) - Psi(a*) = %.3g", worst) + ", eta<=0 skipped: " + std::to_string(skipped)};
}

Outcome rate_oracle() {
  const auto p = desk();
  const auto report = check_rate_consistency(p, 50);
  const double spot = r_joint_numeric(p.source(), 0.625, 0.625).bits;
  return {report.passed && report.checked == 50 && std::abs(spot - 0.5) <= 1e-4,
          fmt("max gap %.3g bits over ", report.max_gap_bits) + std::to_string(report.checked) +
              fmt(" points, R(0.625, 0.625) = %.8f", spot)};
}

Outcome monte_carlo() {
  const auto p = desk();
  const SimulationConfig cfg{200000, 20080706, {0.5, 0.5}};
  const auto a = simulate(p, cfg);
  const auto b = simulate(p, cfg);
  const double e1 = rel_err(a.empirical_d1, 0.625);
  const double e2 = rel_err(a.empirical_d2, 0.75);
  const double ep = rel_err(a.empirical_power, 1.0);
  const bool same = a == b && to_key_values(a) == to_key_values(b);
  return {e1 <= 0.02 && e2 <= 0.02 && ep <= 0.02 && same,
          fmt("rel err d1 %.4f", e1) + fmt(", d2 %.4f", e2) + fmt(", power %.4f", ep) +
              (same ? ", reports byte-identical" : ", reports differ")};
}

Outcome receiver_bound_endpoints() {
  const auto p = desk();
  const double rate = lemma3_bound(p, d_min(p, Receiver::two)).bits;
  const double lower = receiver1_d2_lower(p, conditional_variance(p.source()));
  return {rate == 0.0 && lower == d_min(p, Receiver::two),
          fmt("lemma3_bound(D2_min) = %.17g", rate) + fmt(", receiver1_d2_lower = %.17g", lower)};
}

Outcome symmetry() {
  const auto flipped = negate_rho_transform({1.0, -0.5});
  const auto neg = validate_problem(flipped.source, {1.0, 1.0, 2.0});
  const SimulationConfig cfg{200000, 77, {0.5, 0.5}};
  const auto run_neg = simulate(neg, cfg, flipped.flip_s1 ? SourceSign::negated_s1 : SourceSign::canonical);
  const auto run_pos = simulate(desk(), cfg);
  const bool sign_ok = flipped.flip_s1 && run_neg.empirical_d1 == run_pos.empirical_d1 &&
                       run_neg.empirical_d2 == run_pos.empirical_d2;

  bool factors_exact = true;
  double oracle_err = 0.0;
  const auto p = desk();
  for (int k = 0; k <= 10; ++k) {
    const double alpha = k / 10.0;
    const auto d = uncoded_distortions(p, UncodedCoeffs::from_alpha(alpha));
    const auto s = scale_variance_transform({d.d1, d.d2, 1.0, 1.0}, 4.0, 9.0);
    factors_exact = factors_exact && s.d1 == 4.0 * d.d1 && s.d2 == 9.0 * d.d2 && s.var1 == 4.0 && s.var2 == 9.0;
    // Scaled scheme on the unequal-variance source: X = f(S1/2, S2/3).
    const auto o = oracle::linear_scheme_distortions(4.0, 9.0, 0.5, 1.0, 1.0, 2.0, alpha / 2.0, (1.0 - alpha) / 3.0);
    oracle_err = std::max({oracle_err, rel_err(s.d1, o.d1), rel_err(s.d2, o.d2)});
  }
  return {sign_ok && factors_exact && oracle_err <= 1e-12,
          std::string(sign_ok ? "rho=-0.5 run identical" : "rho=-0.5 run differs") +
              (factors_exact ? ", scaling exact" : ", scaling inexact") +
              fmt(", unequal-variance oracle rel err %.3g", oracle_err)};
}

Outcome verify_is_live() {
  auto call = [](std::vector<std::string> args) {
    args.insert(args.begin(), "ubc");
    std::vector<const char*> argv;
    for (const auto& s : args) argv.push_back(s.c_str());
    std::ostringstream out, err;
    return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  };
  const int ok = call({"verify"});
  const int corrupted = call({"verify", "--tol", "1e-18"});
  return {ok == 0 && corrupted == 1,
          "default exit " + std::to_string(ok) + ", tol=1e-18 exit " + std::to_string(corrupted)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 corner-point identities", corner_points},
      {"2 threshold identity and floor", threshold_identity},
      {"3 uncoded boundary meets converse on the reference config", uncoded_converse_match},
      {"4 witness maximality", witness_maximality},
      {"5 joint rate-distortion oracle consistency", rate_oracle},
      {"6 Monte-Carlo agreement and determinism", monte_carlo},
      {"7 receiver bound endpoints", receiver_bound_endpoints},
      {"8 sign and variance symmetries", symmetry},
      {"9 verify subcommand is live", verify_is_live},
  };

  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    failed += !o.pass;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
