// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "shiftrm/config.hpp"
#include "shiftrm/errors.hpp"
#include "shiftrm/report.hpp"
#include "shiftrm/sim.hpp"

using namespace shiftrm;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ScenarioConfig small_scenario() {
  ScenarioConfig config;
  config.name = "report-unit";
  config.model = experiment1_model();
  config.n_per_curve = 500;
  config.rm.known_f1 = 0.5;
  config.nw.enabled = true;
  config.nw.grid_points = 11;
  config.seed = 99;
  return config;
}

}  // namespace

TEST_CASE("rm state json round-trips bit-exactly") {
  RMState state;
  state.theta_hat = 0.1 + 0.2;  // deliberately non-representable decimals
  state.n = 123456789012345;
  state.sum_t2 = 1.0 / 3.0;
  state.projection_count = 7;
  state.f1_hat = -0.4999999999999999;

  SUBCASE("without frozen sign") {
    const RMState back = rm_state_from_json_string(rm_state_to_json_string(state));
    CHECK(back.theta_hat == state.theta_hat);
    CHECK(back.n == state.n);
    CHECK(back.sum_t2 == state.sum_t2);
    CHECK(back.projection_count == state.projection_count);
    CHECK(back.f1_hat == state.f1_hat);
    CHECK(!back.sign_frozen.has_value());
  }
  SUBCASE("with frozen sign") {
    state.sign_frozen = -1;
    const RMState back = rm_state_from_json_string(rm_state_to_json_string(state));
    CHECK(back.theta_hat == state.theta_hat);
    REQUIRE(back.sign_frozen.has_value());
    CHECK(*back.sign_frozen == -1);
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(rm_state_from_json_string("not json"), DataError);
    CHECK_THROWS_AS(rm_state_from_json_string("{\"theta_hat\": 1}"), DataError);
  }
}

TEST_CASE("report json carries the documented layout") {
  const ScenarioConfig config = small_scenario();
  const RunReport report = run_scenario(config, 0);
  const nlohmann::json j = nlohmann::json::parse(report_to_json_string(report, config));

  CHECK(j.at("scenario").at("name") == "report-unit");
  CHECK(j.at("scenario").at("model").at("theta") == 0.1);
  CHECK(j.at("scenario").at("rm").at("mode") == "sign");
  CHECK(j.at("scenario").at("rm").at("known_f1") == 0.5);
  CHECK(j.at("scenario").at("nw").at("grid_points") == 11);
  CHECK(j.at("scenario").at("seed") == 99);

  CHECK(j.at("final_theta_hat").get<double>() == report.final_theta_hat);
  CHECK(j.at("ci").is_object());
  CHECK(j.at("ci").at("level") == 0.95);
  CHECK(j.at("ci").at("lower").get<double>() < j.at("ci").at("upper").get<double>());
  CHECK(j.at("ci_known").at("variance").get<double>() ==
        doctest::Approx(xi_squared(config.model)).epsilon(1e-12));
  CHECK(j.at("delta_hat").is_null());
  CHECK(j.at("regimes").is_null());
  CHECK(j.at("rm_state").at("sum_T2").get<double>() == report.rm_state.sum_t2);
  CHECK(j.at("projection_count").get<std::int64_t>() == report.projection_count);
  CHECK(j.at("diagnostics").is_object());
  CHECK(j.at("diagnostics").contains("t2_second_moment"));

  // The snapshot inside a full report is itself loadable.
  const RMState back = rm_state_from_json_string(report_to_json_string(report, config));
  CHECK(back.theta_hat == report.rm_state.theta_hat);
  CHECK(back.sum_t2 == report.rm_state.sum_t2);
}

TEST_CASE("change-run report lists the per-regime estimates") {
  ScenarioConfig config;
  config.name = "report-change";
  config.model = experiment2_model();
  config.n_per_curve = 50;
  config.n_curves = 6;
  config.regime_breaks = {{0, -0.2}, {2, 0.1}};
  config.rm.mode = RMMode::kNonsymmetric;
  config.rm.f1 = 0.5;
  config.rm.g1 = 0.5;
  config.nw.enabled = false;
  config.seed = 7;
  const RunReport report = run_scenario(config, 0);
  const nlohmann::json j = nlohmann::json::parse(report_to_json_string(report, config));
  CHECK(j.at("delta_hat").is_number());
  CHECK(j.at("regimes").at("first_estimates").size() == 2);
  CHECK(j.at("regimes").at("last_estimates").size() == 4);
  CHECK(j.at("scenario").at("regime_breaks").size() == 2);
  CHECK(j.at("scenario").at("regime_breaks").at(1).at("start_curve") == 2);
}

TEST_CASE("echo-map report overload") {
  RunReport report;
  report.final_theta_hat = 0.125;
  const std::string text =
      report_to_json_string(report, {{"command", "estimate"}, {"input", "obs.csv"}});
  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j.at("scenario").at("command") == "estimate");
  CHECK(j.at("scenario").at("input") == "obs.csv");
  CHECK(j.at("ci").is_null());
}

TEST_CASE("csv writers round-trip and are stable") {
  const ScenarioConfig config = small_scenario();
  const RunReport report = run_scenario(config, 0);
  const std::string trace_path = "unit_trace.csv";
  const std::string curve_path = "unit_curve.csv";

  write_trace_csv(trace_path, "theta_hat", report.theta_trace);
  write_curve_csv(curve_path, report.curve);

  const std::string trace_text = slurp(trace_path);
  CHECK(trace_text.rfind("n,theta_hat\n", 0) == 0);
  std::istringstream lines(trace_text);
  std::string line;
  std::getline(lines, line);  // header
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    const double value = std::strtod(line.c_str() + comma + 1, nullptr);
    CHECK(value == report.theta_trace[rows].value);  // %.17g round-trips
    ++rows;
  }
  CHECK(rows == report.theta_trace.size());

  const std::string curve_text = slurp(curve_path);
  CHECK(curve_text.rfind("x,f_hat,ci_lower,ci_upper\n", 0) == 0);

  // Rewriting the same data yields byte-identical files.
  write_trace_csv(trace_path, "theta_hat", report.theta_trace);
  CHECK(slurp(trace_path) == trace_text);
  write_curve_csv(curve_path, report.curve);
  CHECK(slurp(curve_path) == curve_text);

  std::remove(trace_path.c_str());
  std::remove(curve_path.c_str());
  CHECK_THROWS_AS(write_text_file("no/such/dir/file.txt", "x"), DataError);
}

TEST_CASE("scenario text parsing") {
  const std::string text =
      "# comment\n"
      "name = parsed\n"
      "model = experiment2\n"
      "n_per_curve = 100\n"
      "n_curves = 4\n"
      "regime_breaks = 0:-0.2, 2:0.1\n"
      "rm_mode = nonsym\n"
      "f1 = 0.5\n"
      "g1 = 0.5\n"
      "nw_enabled = false\n"
      "seed = 42\n";
  const ScenarioConfig config = parse_scenario_string(text);
  CHECK(config.name == "parsed");
  CHECK(config.model.sigma2 == 0.2);  // benchmark default when unset
  CHECK(config.n_per_curve == 100);
  CHECK(config.n_curves == 4);
  REQUIRE(config.regime_breaks.size() == 2);
  CHECK(config.regime_breaks[0].start_curve == 0);
  CHECK(config.regime_breaks[0].theta == -0.2);
  CHECK(config.regime_breaks[1].start_curve == 2);
  CHECK(config.regime_breaks[1].theta == 0.1);
  CHECK(config.rm.mode == RMMode::kNonsymmetric);
  CHECK(config.seed == 42);
  CHECK(!config.nw.enabled);

  // Explicit sigma2 wins over the benchmark default.
  ScenarioConfig loud = parse_scenario_string(text + "sigma2 = 1.0\n");
  CHECK(loud.model.sigma2 == 1.0);
}

TEST_CASE("scenario parsing errors name the field") {
  try {
    parse_scenario_string("name = x\nmodel = experiment1\nbogus_key = 1\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("bogus_key") != std::string::npos);
  }
  try {
    parse_scenario_string("model = experiment1\nseed = many\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("seed") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_scenario_string("model = experiment3\n"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_string("model = experiment1\nregime_breaks = 0-0.2\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_scenario_string("model = experiment1\nexponent = 0.3\n"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_file("definitely_missing.cfg"), ConfigError);
}

TEST_CASE("shipped benchmark configs parse") {
  const std::string dir = SHIFTRM_CONFIG_DIR;
  const ScenarioConfig exp1 = parse_scenario_file(dir + "/experiment1.cfg");
  CHECK(exp1.name == "experiment1");
  CHECK(exp1.model.theta == 0.1);
  CHECK(exp1.model.sigma2 == 1.0);
  CHECK(exp1.model.f1 == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(exp1.n_per_curve == 1000);
  CHECK(exp1.rm.mode == RMMode::kSymmetricSign);
  REQUIRE(exp1.rm.known_f1.has_value());
  CHECK(*exp1.rm.known_f1 == 0.5);
  CHECK(exp1.nw.enabled);
  CHECK(exp1.nw.grid_points == 101);
  CHECK(exp1.seed == 20260815);

  const ScenarioConfig exp2 = parse_scenario_file(dir + "/experiment2.cfg");
  CHECK(exp2.name == "experiment2");
  CHECK(exp2.model.sigma2 == 0.2);
  CHECK(exp2.n_curves == 30);
  REQUIRE(exp2.regime_breaks.size() == 2);
  CHECK(exp2.regime_breaks[1].start_curve == 10);
  CHECK(exp2.regime_breaks[1].theta == 0.1);
  CHECK(exp2.rm.mode == RMMode::kNonsymmetric);
  CHECK(!exp2.nw.enabled);
}
