// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate for the estimation pipeline.  Eleven independent checks,
// one [PASS]/[FAIL] line each; the exit status is the number of failures.
// Every tolerance is pinned here, next to the check that uses it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "shiftrm/model.hpp"
#include "shiftrm/nw.hpp"
#include "shiftrm/rm.hpp"
#include "shiftrm/rng.hpp"
#include "shiftrm/sim.hpp"
#include "shiftrm/stats.hpp"

using namespace shiftrm;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kJobs = 4;

int g_failures = 0;

class Check {
 public:
  Check(int id, const std::string& name) : id_(id), name_(name) {
    start_ = std::chrono::steady_clock::now();
  }

  void require(bool ok, const std::string& what) {
    if (!ok) {
      failed_.push_back(what);
    }
  }

  void note(const std::string& what) { notes_.push_back(what); }

  // Wall-clock budget; exceeding it is itself a failure.
  void budget_ms(double limit) {
    const double ms = elapsed_ms();
    std::ostringstream what;
    what << "runtime " << ms << " ms exceeds " << limit << " ms";
    require(ms <= limit, what.str());
  }

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

  ~Check() {
    const bool ok = failed_.empty();
    if (!ok) ++g_failures;
    std::ostringstream detail;
    for (std::size_t i = 0; i < notes_.size(); ++i) detail << (i ? "; " : "") << notes_[i];
    for (std::size_t i = 0; i < failed_.size(); ++i)
      detail << (detail.str().empty() ? "" : "; ") << "FAILED " << failed_[i];
    std::printf("[%s] check %2d %-34s %s [%.0f ms]\n", ok ? "PASS" : "FAIL", id_, name_.c_str(),
                detail.str().c_str(), elapsed_ms());
    std::fflush(stdout);
  }

 private:
  int id_;
  std::string name_;
  std::vector<std::string> failed_;
  std::vector<std::string> notes_;
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

ScenarioConfig benchmark1_scenario(std::int64_t n, int replicates, bool with_curve) {
  ScenarioConfig config;
  config.name = "benchmark1";
  config.model = experiment1_model();
  config.n_per_curve = n;
  config.n_curves = 1;
  config.rm.mode = RMMode::kSymmetricSign;
  config.rm.f1_sign = +1;
  config.rm.known_f1 = 0.5;
  config.nw.enabled = with_curve;
  config.seed = 20260815;
  config.replicates = replicates;
  return config;
}

ScenarioConfig benchmark2_scenario(int replicates) {
  ScenarioConfig config;
  config.name = "benchmark2";
  config.model = experiment2_model();
  config.n_per_curve = 200;
  config.n_curves = 30;
  config.regime_breaks = {{0, -0.2}, {10, 0.1}};
  config.rm.mode = RMMode::kNonsymmetric;
  config.rm.f1 = 0.5;
  config.rm.g1 = 0.5;
  config.nw.enabled = false;
  config.seed = 20260815;
  config.replicates = replicates;
  return config;
}

// ---------------------------------------------------------------------------

// 1. The closed-form drift and its quadrature evaluation agree on a grid.
void check_drift_agreement() {
  Check check(1, "drift closed form vs quadrature");
  const ModelSpec model = experiment1_model();
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double t = -0.5 + static_cast<double>(i) / 100.0;
    worst = std::max(worst, std::abs(phi_closed(model, t) - phi_quadrature(model, t)));
  }
  check.note("max |closed - quadrature| = " + fmt(worst));
  check.require(worst <= 1e-8, "grid disagreement " + fmt(worst) + " > 1e-8");
  check.budget_ms(1000.0);
}

// 2. The asymptotic variance of the plain step hits its known value.
void check_xi_squared() {
  Check check(2, "asymptotic variance closed form");
  const ModelSpec model = experiment1_model();
  const double xi2 = xi_squared(model);
  const double xi2_target = 7.0 / (8.0 * (2.0 * kPi - 1.0));
  check.note("xi^2 = " + fmt(xi2));
  check.require(std::abs(xi2 - xi2_target) <= 1e-9,
                "xi^2 off target " + fmt(xi2_target) + " by " + fmt(xi2 - xi2_target));
  const double second_moment = varphi_quadrature(model, model.theta);
  check.note("second moment at the root = " + fmt(second_moment));
  check.require(std::abs(second_moment - 7.0 / 8.0) <= 1e-8,
                "second moment off 7/8 by " + fmt(second_moment - 0.875));
}

// 3. A known-variance interval reproduces the benchmark digits.
void check_interval_digits() {
  Check check(3, "confidence interval digits");
  RMState state;
  state.theta_hat = 0.1014;
  state.n = 1000;
  const ConfidenceInterval ci =
      confidence_interval(state, 7.0 / (8.0 * (2.0 * kPi - 1.0)), 0.95);
  check.note("interval [" + fmt(ci.lower) + ", " + fmt(ci.upper) + "]");
  check.require(std::llround(ci.lower * 1e4) == 762, "lower endpoint != 0.0762 at 4 decimals");
  check.require(std::llround(ci.upper * 1e4) == 1266, "upper endpoint != 0.1266 at 4 decimals");
  check.require(std::llround((ci.upper - ci.lower) * 1e4) == 504,
                "width != 0.0504 at 4 decimals");
}

// 4. The curve-variance table: 5/38 strictly inside, 5/19 in the tails and
//    at the center point.
void check_curve_variance_table() {
  Check check(4, "curve variance table");
  const ModelSpec model = experiment1_model();
  double worst = 0.0;
  int probed = 0;
  for (int i = -50; i <= 50; ++i) {
    const double x = static_cast<double>(i) / 100.0;
    const double v2 = nw_asymptotic_variance(model, x, 0.9, 0.5);
    const double target = (x != 0.0 && std::abs(x) <= 0.4) ? 5.0 / 38.0 : 5.0 / 19.0;
    worst = std::max(worst, std::abs(v2 - target));
    ++probed;
  }
  check.note(std::to_string(probed) + " points, max |v2 - rational| = " + fmt(worst));
  check.require(worst <= 1e-12, "table deviation " + fmt(worst) + " > 1e-12");
}

// 5. Monte Carlo shift recovery: mean estimate and interval coverage.
void check_shift_recovery() {
  Check check(5, "shift recovery over replicates");
  const ScenarioConfig config = benchmark1_scenario(1000, 500, false);
  const std::vector<RunReport> reports = run_replicates(config, kJobs);
  std::vector<double> finals;
  int covered = 0;
  for (const RunReport& r : reports) {
    finals.push_back(r.final_theta_hat);
    if (r.ci_known && r.ci_known->lower <= 0.1 && 0.1 <= r.ci_known->upper) ++covered;
  }
  const double m = mean(finals);
  const double coverage = static_cast<double>(covered) / static_cast<double>(reports.size());
  check.note("mean = " + fmt(m) + ", coverage = " + fmt(coverage));
  check.require(std::abs(m - 0.1) <= 0.01, "mean estimate off 0.1 by " + fmt(m - 0.1));
  check.require(coverage >= 0.90 && coverage <= 0.98,
                "coverage " + fmt(coverage) + " outside [0.90, 0.98]");
  check.budget_ms(30000.0);
}

// 6. Central limit behavior of the normalized error, plain and efficient.
void check_clt_variance() {
  Check check(6, "normalized error distribution");
  ScenarioConfig config = benchmark1_scenario(10000, 500, false);
  const CltDiagnostics plain = clt_diagnostic(config, kJobs);
  check.note("plain z-variance = " + fmt(plain.z_variance) +
             ", ks = " + fmt(plain.ks_distance));
  check.require(plain.z_variance >= 0.8 && plain.z_variance <= 1.2,
                "plain z-variance " + fmt(plain.z_variance) + " outside [0.8, 1.2]");
  check.require(plain.ks_distance < 0.08,
                "ks distance " + fmt(plain.ks_distance) + " >= 0.08");

  config.rm.mode = RMMode::kEfficientKnownF1;
  config.rm.f1 = 0.5;
  const CltDiagnostics efficient = clt_diagnostic(config, kJobs);
  const double eff_target = 0.875 / (kPi * kPi);
  check.note("efficient z-variance = " + fmt(efficient.z_variance));
  check.require(std::abs(efficient.target_variance - eff_target) <= 1e-9,
                "efficient standardization is not 7/(8 pi^2)");
  check.require(efficient.z_variance >= 0.8 && efficient.z_variance <= 1.2,
                "efficient z-variance " + fmt(efficient.z_variance) + " outside [0.8, 1.2]");
}

// 7. Quadratic strong law: the log-normalized squared-deviation sum
//    approaches the asymptotic variance.
void check_quadratic_strong_law() {
  Check check(7, "quadratic strong law");
  const ScenarioConfig config = benchmark1_scenario(100000, 1, false);
  const double xi2 = xi_squared(config.model);
  std::vector<double> ratios;
  for (int r = 0; r < 20; ++r) {
    const RunReport report = run_experiment_single(config, r);
    ratios.push_back(report.diagnostics.at("qsl_final") / xi2);
  }
  const double med = median(ratios);
  check.note("median ratio to xi^2 = " + fmt(med));
  check.require(med >= 0.7 && med <= 1.3, "median ratio " + fmt(med) + " outside [0.7, 1.3]");
  check.budget_ms(60000.0);
}

// 8. Change detection: the estimated jump lands near the true 0.3.
void check_change_detection() {
  Check check(8, "change detection");
  const ScenarioConfig config = benchmark2_scenario(100);
  const std::vector<RunReport> reports = run_replicates(config, kJobs);
  int hits = 0;
  double worst = 0.0;
  for (const RunReport& r : reports) {
    const double err = std::abs(*r.delta_hat - 0.3);
    worst = std::max(worst, err);
    if (err <= 0.05) ++hits;
  }
  const double rate = static_cast<double>(hits) / static_cast<double>(reports.size());
  check.note("within 0.05 in " + fmt(100.0 * rate) + "% (worst err " + fmt(worst) + ")");
  check.require(rate >= 0.90, "hit rate " + fmt(rate) + " below 0.90");
}

// 9. Curve consistency: more data gives a smaller worst-case curve error.
void check_curve_consistency_trend() {
  Check check(9, "curve error shrinks with n");
  const ShapeFunction truth = experiment1_model().f;
  auto max_inner_error = [&](const RunReport& report) {
    double worst = 0.0;
    for (const CurvePoint& p : report.curve) {
      if (!p.defined || std::abs(p.x) > 0.4) continue;
      worst = std::max(worst, std::abs(p.f_hat - truth.evaluator(p.x)));
    }
    return worst;
  };
  // The two runs share the replicate stream, so the short run is an exact
  // prefix of the long one.
  const ScenarioConfig short_config = benchmark1_scenario(1000, 1, true);
  const ScenarioConfig long_config = benchmark1_scenario(10000, 1, true);
  std::vector<double> err_short, err_long;
  for (int r = 0; r < 20; ++r) {
    err_short.push_back(max_inner_error(run_experiment_single(short_config, r)));
    err_long.push_back(max_inner_error(run_experiment_single(long_config, r)));
  }
  const double med_short = median(err_short);
  const double med_long = median(err_long);
  check.note("median max error " + fmt(med_short) + " at 1e3 -> " + fmt(med_long) + " at 1e4");
  check.require(med_long < med_short, "error did not decrease with tenfold data");
}

// 10. The streaming accumulators equal an offline recomputation of the same
//     logged history.
void check_streaming_vs_batch() {
  Check check(10, "streaming equals batch replay");
  const ModelSpec model = experiment1_model();
  RMConfig rm;
  rm.mode = RMMode::kSymmetricSign;
  rm.known_f1 = 0.5;
  const KernelSpec kernel = uniform_kernel();
  const std::vector<double> grid = symmetric_grid(101);

  NWState streaming = make_nw_state(grid, 0.9);
  RMState state = make_rm_state(rm, model.theta);
  Rng rng(20260815);
  std::vector<double> xs, ys, thetas;
  for (int k = 0; k < 200; ++k) {
    const Observation obs = generate_observation(model, rng);
    xs.push_back(obs.x);
    ys.push_back(obs.y);
    thetas.push_back(state.theta_hat);
    nw_update(streaming, kernel, obs.x, obs.y, state.theta_hat);
    state = rm_step(rm, state, obs.x, obs.y, density_value(model.g, obs.x));
  }

  std::vector<double> num(grid.size(), 0.0), den(grid.size(), 0.0);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double h = std::pow(static_cast<double>(k + 1), -0.9);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double w = nw_weight(kernel, h, xs[k], thetas[k], grid[j]) +
                       nw_weight(kernel, h, xs[k], thetas[k], -grid[j]);
      if (w != 0.0) {
        num[j] += w * ys[k];
        den[j] += w;
      }
    }
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    worst = std::max(worst, std::abs(streaming.num[j] - num[j]) / std::max(1.0, std::abs(num[j])));
    worst = std::max(worst, std::abs(streaming.den[j] - den[j]) / std::max(1.0, std::abs(den[j])));
  }
  check.note("worst relative gap = " + fmt(worst));
  check.require(worst <= 1e-12, "relative gap " + fmt(worst) + " > 1e-12");
}

// 11. Property families, one thousand randomized cases each.
void check_property_suite() {
  Check check(11, "randomized invariants");
  Rng meta(0xACCE55);

  // Family A: the iterate never leaves the projection interval.
  {
    int cases = 0;
    bool ok = true;
    for (int c = 0; c < 1000 && ok; ++c, ++cases) {
      RMConfig rm;
      rm.mode = static_cast<RMMode>(meta.next_u64() % 4);
      rm.f1_sign = (meta.next_u64() & 1) ? +1 : -1;
      rm.f1 = (rm.mode == RMMode::kNonsymmetric || rm.mode == RMMode::kEfficientKnownF1)
                  ? (0.1 + meta.uniform01())
                  : 0.0;
      rm.g1 = rm.mode == RMMode::kNonsymmetric ? meta.uniform01() : 0.0;
      rm.gamma0 = 0.1 + 2.0 * meta.uniform01();
      rm.exponent = 0.55 + 0.45 * meta.uniform01();
      rm.projection_radius = 0.05 + meta.uniform01();
      rm.theta0 = (2.0 * meta.uniform01() - 1.0) * rm.projection_radius;
      RMState state = make_rm_state(rm);
      for (int k = 0; k < 50; ++k) {
        const double x = meta.uniform01() - 0.5;
        const double y = 4.0 * meta.normal();
        state = rm_step(rm, state, x, y, 0.5 + meta.uniform01());
        if (std::abs(state.theta_hat) > rm.projection_radius) {
          ok = false;
          break;
        }
      }
    }
    check.note("containment x" + std::to_string(cases));
    check.require(ok, "iterate escaped the projection interval");
  }

  // Family B: the symmetrized curve is an exact even function.
  {
    bool ok = true;
    int cases = 0;
    for (int c = 0; c < 1000 && ok; ++c, ++cases) {
      const int points = 3 + static_cast<int>(meta.next_u64() % 60);
      const KernelSpec kernel = (meta.next_u64() & 1) ? uniform_kernel() : epanechnikov_kernel();
      NWState state = make_nw_state(symmetric_grid(points), 0.4 + 0.5 * meta.uniform01());
      const int n = 1 + static_cast<int>(meta.next_u64() % 40);
      for (int k = 0; k < n; ++k) {
        nw_update(state, kernel, meta.uniform01() - 0.5, meta.normal(),
                  0.2 * (meta.uniform01() - 0.5));
      }
      for (int j = 0; j < points; ++j) {
        const int mirror = points - 1 - j;
        if (state.num[j] != state.num[mirror] || state.den[j] != state.den[mirror]) {
          ok = false;
          break;
        }
        if (state.den[j] > 0.0 &&
            nw_evaluate_at(state, state.grid[j]) != nw_evaluate_at(state, -state.grid[j])) {
          ok = false;
          break;
        }
      }
    }
    check.note("evenness x" + std::to_string(cases));
    check.require(ok, "curve evaluation is not exactly even");
  }

  // Family C: identical seeds give identical trajectories.
  {
    bool ok = true;
    int cases = 0;
    for (int c = 0; c < 1000 && ok; ++c, ++cases) {
      const std::uint64_t seed = meta.next_u64();
      RMConfig rm;
      rm.mode = static_cast<RMMode>(meta.next_u64() % 4);
      rm.f1 = 0.5;
      rm.g1 = 0.25;
      rm.gamma0 = 0.5 + meta.uniform01();
      auto run = [&](RMState* out) {
        Rng rng(seed);
        RMState state = make_rm_state(rm, 0.1);
        for (int k = 0; k < 30; ++k) {
          const double x = rng.uniform01() - 0.5;
          state = rm_step(rm, state, x, std::sin(6.0 * x) + rng.normal(), 1.0);
        }
        *out = state;
      };
      RMState a, b;
      run(&a);
      run(&b);
      ok = a.theta_hat == b.theta_hat && a.sum_t2 == b.sum_t2 &&
           a.sum_sq_dev == b.sum_sq_dev && a.projection_count == b.projection_count;
    }
    check.note("determinism x" + std::to_string(cases));
    check.require(ok, "identical seeds diverged");

    // Report-level reproducibility on top of the step-level family.
    const ScenarioConfig config = benchmark1_scenario(300, 1, true);
    for (int r = 0; r < 5 && ok; ++r) {
      const RunReport a = run_scenario(config, r);
      const RunReport b = run_scenario(config, r);
      ok = a.final_theta_hat == b.final_theta_hat && a.rm_state.sum_t2 == b.rm_state.sum_t2;
      for (std::size_t j = 0; ok && j < a.curve.size(); ++j)
        ok = a.curve[j].f_hat == b.curve[j].f_hat;
    }
    check.require(ok, "report-level reruns diverged");
  }

  // Family D: all-zero responses never move the iterate.
  {
    bool ok = true;
    int cases = 0;
    for (int c = 0; c < 1000 && ok; ++c, ++cases) {
      RMConfig rm;
      rm.mode = static_cast<RMMode>(meta.next_u64() % 4);
      rm.f1 = 0.3 + meta.uniform01();
      rm.gamma0 = 0.5 + 4.0 * meta.uniform01();
      rm.projection_radius = 0.05 + meta.uniform01();
      rm.theta0 = (2.0 * meta.uniform01() - 1.0) * rm.projection_radius;
      RMState state = make_rm_state(rm);
      for (int k = 0; k < 25; ++k) {
        state = rm_step(rm, state, meta.uniform01() - 0.5, 0.0, 1.0);
      }
      ok = state.theta_hat == rm.theta0 && state.projection_count == 0 && state.sum_t2 == 0.0;
    }
    check.note("zero-data fixed point x" + std::to_string(cases));
    check.require(ok, "zero responses moved the iterate");
  }
}

}  // namespace

int main() {
  check_drift_agreement();
  check_xi_squared();
  check_interval_digits();
  check_curve_variance_table();
  check_shift_recovery();
  check_clt_variance();
  check_quadratic_strong_law();
  check_change_detection();
  check_curve_consistency_trend();
  check_streaming_vs_batch();
  check_property_suite();

  if (g_failures == 0) {
    std::printf("acceptance: all 11 checks passed\n");
  } else {
    std::printf("acceptance: %d check(s) failed\n", g_failures);
  }
  return g_failures;
}
