// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include <doctest.h>

#include "shiftrm/errors.hpp"
#include "shiftrm/sim.hpp"
#include "shiftrm/stats.hpp"

using namespace shiftrm;

namespace {

ScenarioConfig single_scenario(std::int64_t n, bool with_curve) {
  ScenarioConfig config;
  config.name = "unit-single";
  config.model = experiment1_model();
  config.n_per_curve = n;
  config.n_curves = 1;
  config.rm.mode = RMMode::kSymmetricSign;
  config.rm.f1_sign = +1;
  config.rm.known_f1 = 0.5;
  config.nw.enabled = with_curve;
  config.seed = 20260815;
  return config;
}

ScenarioConfig change_scenario(bool cumulative) {
  ScenarioConfig config;
  config.name = "unit-change";
  config.model = experiment2_model();
  config.n_per_curve = 200;
  config.n_curves = 30;
  config.regime_breaks = {{0, -0.2}, {10, 0.1}};
  config.rm.mode = RMMode::kNonsymmetric;
  config.rm.f1 = 0.5;
  config.rm.g1 = 0.5;
  config.nw.enabled = false;
  config.seed = 20260815;
  config.cumulative_regimes = cumulative;
  return config;
}

}  // namespace

TEST_CASE("generate_observation draws from the model") {
  ModelSpec model = experiment1_model();
  SUBCASE("noise-free responses sit on the curve") {
    model.sigma2 = 0.0;
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
      const Observation obs = generate_observation(model, rng);
      CHECK(obs.x >= -0.5);
      CHECK(obs.x <= 0.5);
      CHECK(obs.y == model.f.evaluator(obs.x - model.theta));
    }
  }
  SUBCASE("consumes exactly one uniform and one normal") {
    Rng a(11), b(11);
    (void)generate_observation(model, a);
    (void)b.uniform01();
    (void)b.normal();
    CHECK(a.next_u64() == b.next_u64());
  }
  SUBCASE("residual moments match sigma2") {
    Rng rng(17);
    const int n = 200000;
    std::vector<double> residuals(n);
    double x_mean = 0.0;
    for (int k = 0; k < n; ++k) {
      const Observation obs = generate_observation(model, rng);
      residuals[k] = obs.y - model.f.evaluator(obs.x - model.theta);
      x_mean += obs.x;
    }
    CHECK(std::abs(mean(residuals)) < 0.01);
    CHECK(sample_variance(residuals) == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(x_mean / n) < 0.01);
  }
}

TEST_CASE("runs are deterministic in seed and replicate") {
  const ScenarioConfig config = single_scenario(2000, true);
  const RunReport a = run_scenario(config, 0);
  const RunReport b = run_scenario(config, 0);
  CHECK(a.final_theta_hat == b.final_theta_hat);
  CHECK(a.rm_state.sum_t2 == b.rm_state.sum_t2);
  CHECK(a.theta_trace.size() == b.theta_trace.size());
  REQUIRE(a.curve.size() == b.curve.size());
  for (std::size_t j = 0; j < a.curve.size(); ++j) {
    CHECK(a.curve[j].f_hat == b.curve[j].f_hat);
  }
  const RunReport c = run_scenario(config, 1);
  CHECK(c.final_theta_hat != a.final_theta_hat);
}

TEST_CASE("job count never changes replicate results") {
  ScenarioConfig config = single_scenario(1500, false);
  config.replicates = 6;
  const std::vector<RunReport> serial = run_replicates(config, 1);
  const std::vector<RunReport> parallel = run_replicates(config, 4);
  REQUIRE(serial.size() == 6);
  REQUIRE(parallel.size() == 6);
  for (std::size_t r = 0; r < serial.size(); ++r) {
    CHECK(serial[r].final_theta_hat == parallel[r].final_theta_hat);
    CHECK(serial[r].rm_state.sum_t2 == parallel[r].rm_state.sum_t2);
    CHECK(serial[r].projection_count == parallel[r].projection_count);
  }
}

TEST_CASE("single run report carries the expected pieces") {
  const RunReport report = run_scenario(single_scenario(2000, true), 0);
  CHECK(report.scenario_name == "unit-single");
  CHECK(std::abs(report.final_theta_hat - 0.1) < 0.05);
  REQUIRE(report.ci.has_value());
  REQUIRE(report.ci_known.has_value());
  CHECK(report.ci_known->variance ==
        doctest::Approx(xi_squared(experiment1_model())).epsilon(1e-12));
  CHECK(report.ci->lower < report.final_theta_hat);
  CHECK(report.ci->upper > report.final_theta_hat);
  CHECK(!report.delta_hat.has_value());
  CHECK(report.diagnostics.count("xi_squared_known") == 1);
  CHECK(report.diagnostics.count("t2_second_moment") == 1);
  CHECK(report.diagnostics.count("qsl_final") == 1);
  CHECK(report.diagnostics.at("n_final_regime") == 2000.0);
  CHECK(!report.theta_trace.empty());
  CHECK(report.theta_trace.back().n == 2000);
  CHECK(report.theta_trace.back().value == report.final_theta_hat);
  CHECK(!report.qsl_trace.empty());
  REQUIRE(report.curve.size() == 101);
  int defined = 0;
  for (const CurvePoint& p : report.curve) {
    if (p.defined) {
      ++defined;
      CHECK(p.has_band);
      CHECK(p.ci_lower < p.ci_upper);
    }
  }
  CHECK(defined == 101);
}

TEST_CASE("change run estimates the shift jump") {
  const RunReport restart = run_scenario(change_scenario(false), 0);
  REQUIRE(restart.delta_hat.has_value());
  CHECK(restart.first_regime_estimates.size() == 10);
  CHECK(restart.last_regime_estimates.size() == 20);
  CHECK(std::abs(*restart.delta_hat - 0.3) < 0.08);
  // Restart discards the stream before the break.
  CHECK(restart.rm_state.n == 20 * 200);

  const RunReport cumulative = run_scenario(change_scenario(true), 0);
  REQUIRE(cumulative.delta_hat.has_value());
  CHECK(cumulative.rm_state.n == 30 * 200);
  CHECK(std::abs(*cumulative.delta_hat - 0.3) < 0.08);
  CHECK(cumulative.final_theta_hat != restart.final_theta_hat);
}

TEST_CASE("runner dispatch rejects the wrong shape") {
  CHECK_THROWS_AS(run_experiment_change(single_scenario(100, false), 0), ConfigError);
  CHECK_THROWS_AS(run_experiment_single(change_scenario(false), 0), ConfigError);
}

TEST_CASE("normalized errors look Gaussian across replicates") {
  ScenarioConfig config = single_scenario(2000, false);
  config.replicates = 50;
  const CltDiagnostics diag = clt_diagnostic(config, 4);
  CHECK(diag.target_variance == doctest::Approx(xi_squared(experiment1_model())).epsilon(1e-12));
  REQUIRE(diag.std_errors.size() == 50);
  CHECK(std::abs(diag.z_mean) < 0.45);
  CHECK(diag.z_variance > 0.5);
  CHECK(diag.z_variance < 1.6);
  CHECK(diag.ks_distance < 0.25);
  CHECK(diag.curve_z_variance.empty());

  ScenarioConfig bad = config;
  bad.replicates = 1;
  CHECK_THROWS_AS(clt_diagnostic(bad, 1), ConfigError);
  ScenarioConfig withbreaks = change_scenario(false);
  withbreaks.replicates = 4;
  CHECK_THROWS_AS(clt_diagnostic(withbreaks, 1), ConfigError);
}

TEST_CASE("trace thinning is dense early and geometric late") {
  TraceThinner thinner;
  std::int64_t kept = 0;
  for (std::int64_t n = 1; n <= 100000; ++n) {
    if (thinner.due(n)) ++kept;
  }
  CHECK(kept >= 10000);
  // Past 10^4 the spacing grows geometrically: about log(10)/log(1.05) more.
  CHECK(kept <= 10000 + 60);

  const RunReport report = run_scenario(single_scenario(30000, false), 0);
  CHECK(report.theta_trace.size() <= 10100);
  CHECK(report.theta_trace.back().n == 30000);
}

TEST_CASE("validate_scenario rejects bad fields") {
  auto expect_reject = [](auto mutate) {
    ScenarioConfig config = single_scenario(100, false);
    mutate(config);
    CHECK_THROWS_AS(validate_scenario(config), ConfigError);
  };
  expect_reject([](ScenarioConfig& c) { c.n_per_curve = 0; });
  expect_reject([](ScenarioConfig& c) { c.n_curves = 0; });
  expect_reject([](ScenarioConfig& c) { c.replicates = 0; });
  expect_reject([](ScenarioConfig& c) { c.ci_level = 1.0; });
  expect_reject([](ScenarioConfig& c) { c.model.theta = 0.25; });
  expect_reject([](ScenarioConfig& c) { c.rm.gamma0 = -1.0; });
  expect_reject([](ScenarioConfig& c) {
    c.nw.enabled = true;
    c.nw.grid_points = 1;
  });
  expect_reject([](ScenarioConfig& c) {
    c.nw.enabled = true;
    c.nw.alpha = 1.0;
  });
  expect_reject([](ScenarioConfig& c) {
    c.nw.enabled = true;
    c.nw.kernel = "gaussian";
  });
  expect_reject([](ScenarioConfig& c) { c.regime_breaks = {{1, 0.1}}; });
  expect_reject([](ScenarioConfig& c) { c.regime_breaks = {{0, 0.1}, {0, 0.2}}; });
  expect_reject([](ScenarioConfig& c) { c.regime_breaks = {{0, 0.1}, {5, 0.2}}; });
  expect_reject([](ScenarioConfig& c) {
    c.n_curves = 10;
    c.regime_breaks = {{0, 0.1}, {12, 0.2}};
  });
  expect_reject([](ScenarioConfig& c) {
    c.n_curves = 10;
    c.regime_breaks = {{0, 0.1}, {5, 0.3}};
  });
}
