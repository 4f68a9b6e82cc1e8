#include "ubc/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ubc/closed_forms.hpp"
#include "ubc/errors.hpp"
#include "ubc/montecarlo.hpp"
#include "ubc/params.hpp"
#include "ubc/rate_distortion.hpp"

namespace ubc::cli {

namespace {

// Raised for parameter values that parse but are rejected by the library;
// reported like a CLI11 parse error.
struct UsageError {
  std::string message;
};

std::string g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct CliConfig {
  double sigma2 = 1.0;
  double rho = 0.5;
  double power = 1.0;
  double n1 = 1.0;
  double n2 = 2.0;
  std::optional<double> var1;
  std::optional<double> var2;

  std::size_t points = 11;
  double d1 = 0.0;
  std::optional<double> alpha;
  std::optional<double> d1_target;
  std::uint64_t samples = 200000;
  std::uint64_t seed = 1;
  std::size_t grid = 50;
  double tol = kMatchTolerance;
  std::string output;
};

// Problem in canonical form plus what is needed to map results back.
struct Normalized {
  Problem problem;
  bool flip_s1;
  double scale1;
  double scale2;
};

Normalized normalize(const CliConfig& cfg, std::ostream& err) {
  SourceParams raw{cfg.sigma2, cfg.rho};
  double scale1 = 1.0;
  double scale2 = 1.0;
  if (cfg.var1 || cfg.var2) {
    if (!(cfg.var1 && cfg.var2)) throw UsageError{"--var1 and --var2 must be given together"};
    if (!(*cfg.var1 > 0.0)) throw UsageError{"--var1: must be > 0"};
    if (!(*cfg.var2 > 0.0)) throw UsageError{"--var2: must be > 0"};
    // (D1, D2, var1, var2) -> (D1/var1, D2/var2, 1, 1); results go back with
    // the reciprocal factors.
    const auto unit = scale_variance_transform({0.0, 0.0, *cfg.var1, *cfg.var2}, 1.0 / *cfg.var1, 1.0 / *cfg.var2);
    raw.sigma2 = unit.var1;
    scale1 = *cfg.var1;
    scale2 = *cfg.var2;
  }
  if (!(raw.rho > -1.0)) throw UsageError{"--rho: rho must be > -1"};
  const auto canon = negate_rho_transform(raw);
  if (canon.flip_s1) {
    err << "note: rho=" << raw.rho << " normalized to " << canon.source.rho << " (S1 sign flip)\n";
  }
  try {
    return {validate_problem(canon.source, {cfg.power, cfg.n1, cfg.n2}), canon.flip_s1, scale1, scale2};
  } catch (const InvalidArgument& e) {
    throw UsageError{e.what()};
  }
}

void add_problem_options(CLI::App& sub, CliConfig& cfg, bool allow_unequal_variances) {
  auto* s2 = sub.add_option("--sigma2", cfg.sigma2, "common source variance")->capture_default_str();
  sub.add_option("--rho", cfg.rho, "source correlation, may be negative")->capture_default_str();
  sub.add_option("--power", cfg.power, "transmit power P")->capture_default_str();
  sub.add_option("--n1", cfg.n1, "noise variance at Receiver 1")->capture_default_str();
  sub.add_option("--n2", cfg.n2, "noise variance at Receiver 2")->capture_default_str();
  if (allow_unequal_variances) {
    auto* v1 = sub.add_option("--var1", cfg.var1, "variance of S1 (with --var2, replaces --sigma2)");
    auto* v2 = sub.add_option("--var2", cfg.var2, "variance of S2 (with --var1, replaces --sigma2)");
    v1->excludes(s2);
    v2->excludes(s2);
  }
}

int cmd_report(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto norm = normalize(cfg, err);
  const Problem& p = norm.problem;
  const auto lo = scale_variance_transform({d_min(p, Receiver::one), d_min(p, Receiver::two), 1.0, 1.0},
                                           norm.scale1, norm.scale2);
  const auto corners =
      scale_variance_transform({d1_star_at_d2min(p), d2_star_at_d1min(p), 1.0, 1.0}, norm.scale1, norm.scale2);
  const double threshold = simple_threshold(p.source());

  out << "D1_min=" << lo.d1 << '\n'
      << "D2_min=" << lo.d2 << '\n'
      << "D1_star_at_D2_min=" << corners.d1 << '\n'
      << "D2_star_at_D1_min=" << corners.d2 << '\n'
      << "simple_threshold=" << threshold << '\n'
      << "snr1=" << p.snr1() << '\n'
      << "capacity_1=" << channel_capacity(p.power(), p.n1()).bits << '\n'
      << "capacity_2=" << channel_capacity(p.power(), p.n2()).bits << '\n'
      << "uncoded_optimal_everywhere=" << (p.snr1() <= threshold ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_trace(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto norm = normalize(cfg, err);
  if (cfg.points < 2) throw UsageError{"--points: must be >= 2"};
  const auto trace = trace_uncoded_boundary(norm.problem, cfg.points);
  if (cfg.output.empty()) {
    write_trace_csv(out, trace, norm.scale1, norm.scale2);
    return kExitOk;
  }
  std::ofstream file(cfg.output);
  if (!file) throw UsageError{"--output: cannot open " + cfg.output};
  write_trace_csv(file, trace, norm.scale1, norm.scale2);
  return kExitOk;
}

int cmd_bound(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto norm = normalize(cfg, err);
  const Problem& p = norm.problem;
  ConverseValue conv;
  double d2t = 0.0;
  try {
    conv = converse_at(p, cfg.d1);
    d2t = d2_tilde_star(p, cfg.d1);
  } catch (const PreconditionError& e) {
    throw UsageError{std::string("--d1: ") + e.what()};
  } catch (const OutOfRange& e) {
    throw UsageError{std::string("--d1: ") + e.what()};
  }
  out << "d1=" << g17(cfg.d1) << '\n'
      << "d2_tilde_star=" << g17(d2t) << '\n'
      << "a1_star=" << g17(conv.witness.a1) << '\n'
      << "a2_star=" << g17(conv.witness.a2) << '\n'
      << "eta=" << g17(eta(p, cfg.d1, conv.witness)) << '\n'
      << "psi=" << g17(conv.psi) << '\n';
  return kExitOk;
}

int cmd_simulate(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto norm = normalize(cfg, err);
  const Problem& p = norm.problem;

  double alpha = 0.5;
  if (cfg.alpha) {
    alpha = *cfg.alpha;
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw UsageError{"--alpha: must lie in [0, 1]"};
  } else if (cfg.d1_target) {
    try {
      alpha = solve_alpha_for_d1(p, *cfg.d1_target / norm.scale1);
    } catch (const OutOfRange& e) {
      throw UsageError{std::string("--d1-target: ") + e.what()};
    }
  }
  if (cfg.samples < 1) throw UsageError{"--samples: must be >= 1"};

  const SimulationConfig sim{cfg.samples, cfg.seed, UncodedCoeffs::from_alpha(alpha)};
  SimulationReport rep = simulate(p, sim, norm.flip_s1 ? SourceSign::negated_s1 : SourceSign::canonical);
  const bool power_ok = power_check(rep, p.channel(), 0.02);
  const auto analytic = uncoded_distortions(p, sim.coeffs);

  rep.empirical_d1 *= norm.scale1;
  rep.ci_half_width_d1 *= norm.scale1;
  rep.empirical_d2 *= norm.scale2;
  rep.ci_half_width_d2 *= norm.scale2;
  const auto scaled = scale_variance_transform({analytic.d1, analytic.d2, 1.0, 1.0}, norm.scale1, norm.scale2);

  out << "alpha=" << g17(alpha) << '\n'
      << to_key_values(rep) << "analytic_d1=" << g17(scaled.d1) << '\n'
      << "analytic_d2=" << g17(scaled.d2) << '\n'
      << "power_within_2pct=" << (power_ok ? "true" : "false") << '\n';

  if (!cfg.output.empty()) {
    std::ofstream file(cfg.output);
    if (!file) throw UsageError{"--csv: cannot open " + cfg.output};
    file << "alpha,empirical_d1,empirical_d2,empirical_power,ci_half_width_d1,ci_half_width_d2,samples,seed\n"
         << g17(alpha) << ',' << g17(rep.empirical_d1) << ',' << g17(rep.empirical_d2) << ','
         << g17(rep.empirical_power) << ',' << g17(rep.ci_half_width_d1) << ',' << g17(rep.ci_half_width_d2)
         << ',' << rep.samples << ',' << rep.seed << '\n';
  }
  return kExitOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto norm = normalize(cfg, err);
  if (cfg.grid < 1) throw UsageError{"--grid: must be >= 1"};
  if (!(cfg.tol >= 0.0)) throw UsageError{"--tol: must be >= 0"};

  const auto match = verify_matching(norm.problem, cfg.grid, cfg.tol);
  const auto rates = check_rate_consistency(norm.problem, cfg.grid);
  const bool ok = match.passed && rates.passed;

  out << "grid=" << cfg.grid << '\n'
      << "covered=" << match.covered << '\n'
      << "not_covered=" << match.points.size() - match.covered << '\n'
      << "failures=" << match.failures << '\n'
      << "max_residual=" << g17(match.max_residual) << '\n'
      << "tol=" << g17(cfg.tol) << '\n'
      << "matching=" << (match.passed ? "PASS" : "FAIL") << '\n'
      << "rate_checked=" << rates.checked << '\n'
      << "rate_max_gap_bits=" << g17(rates.max_gap_bits) << '\n'
      << "rate_consistency=" << (rates.passed ? "PASS" : "FAIL") << '\n'
      << "verification=" << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

void write_trace_csv(std::ostream& out, const std::vector<BoundaryPoint>& trace, double scale1, double scale2) {
  out << kTraceHeader << '\n';
  for (const auto& pt : trace) {
    const auto d = scale_variance_transform({pt.d1, pt.d2_achievable, 1.0, 1.0}, scale1, scale2);
    out << g17(pt.alpha) << ',' << g17(d.d1) << ',' << g17(d.d2) << ',';
    if (pt.converse) {
      out << g17(scale2 * pt.converse->psi) << ',' << g17(pt.converse->witness.a1) << ','
          << g17(pt.converse->witness.a2);
    } else {
      out << ",,";
    }
    out << ',' << (pt.optimal_flag ? 1 : 0) << '\n';
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uncoded transmission of a bivariate Gaussian source over a Gaussian broadcast channel", "ubc"};
  app.require_subcommand(1);

  CliConfig cfg;
  auto* report = app.add_subcommand("report", "corner points, thresholds and capacities");
  add_problem_options(*report, cfg, true);

  auto* trace = app.add_subcommand("trace", "CSV of the uncoded boundary and the converse curve");
  add_problem_options(*trace, cfg, true);
  trace->add_option("--points", cfg.points, "number of alpha values")->capture_default_str();
  trace->add_option("--output", cfg.output, "write CSV to this file instead of stdout");

  auto* bound = app.add_subcommand("bound", "converse bound at the optimal witness");
  add_problem_options(*bound, cfg, false);
  bound->add_option("--d1", cfg.d1, "distortion at Receiver 1")->required();

  auto* sim = app.add_subcommand("simulate", "Monte-Carlo run of the uncoded scheme");
  add_problem_options(*sim, cfg, true);
  auto* alpha = sim->add_option("--alpha", cfg.alpha, "mixing weight (beta = 1 - alpha); default 0.5");
  auto* target = sim->add_option("--d1-target", cfg.d1_target, "choose alpha so that D1u equals this");
  alpha->excludes(target);
  sim->add_option("--samples", cfg.samples, "number of source symbols")->capture_default_str();
  sim->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  sim->add_option("--csv", cfg.output, "also write the report as a CSV row to this file");

  auto* verify = app.add_subcommand("verify", "check achievability against the converse below the threshold");
  add_problem_options(*verify, cfg, false);
  verify->add_option("--grid", cfg.grid, "number of d1 grid cells")->capture_default_str();
  verify->add_option("--tol", cfg.tol, "residual tolerance relative to sigma2")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (report->parsed()) return cmd_report(cfg, out, err);
    if (trace->parsed()) return cmd_trace(cfg, out, err);
    if (bound->parsed()) return cmd_bound(cfg, out, err);
    if (sim->parsed()) return cmd_simulate(cfg, out, err);
    return cmd_verify(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace ubc::cli
