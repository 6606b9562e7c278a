// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include "shiftrm/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shiftrm/errors.hpp"

namespace shiftrm {
namespace {

using nlohmann::json;

json state_to_json(const RMState& state) {
  json j;
  j["theta_hat"] = state.theta_hat;
  j["n"] = state.n;
  j["sum_T2"] = state.sum_t2;
  j["projection_count"] = state.projection_count;
  j["f1_hat"] = state.f1_hat;
  j["sign_frozen"] = state.sign_frozen ? json(*state.sign_frozen) : json(nullptr);
  return j;
}

json ci_to_json(const ConfidenceInterval& ci) {
  return json{{"lower", ci.lower}, {"upper", ci.upper}, {"level", ci.level},
              {"variance", ci.variance}};
}

json scenario_to_json(const ScenarioConfig& config) {
  json model{{"theta", config.model.theta},
             {"sigma2", config.model.sigma2},
             {"f1", config.model.f1},
             {"g1", config.model.g1},
             {"shape", config.model.f.description},
             {"density", config.model.g.description}};
  json rm{{"mode", rm_mode_name(config.rm.mode)},
          {"f1_sign", config.rm.f1_sign},
          {"f1", config.rm.f1},
          {"g1", config.rm.g1},
          {"gamma0", config.rm.gamma0},
          {"exponent", config.rm.exponent},
          {"projection_radius", config.rm.projection_radius},
          {"theta0", config.rm.theta0},
          {"sign_freeze_threshold", config.rm.sign_freeze_threshold},
          {"g_min", config.rm.g_min}};
  if (config.rm.known_f1) rm["known_f1"] = *config.rm.known_f1;
  json nw{{"enabled", config.nw.enabled},
          {"grid_points", config.nw.grid_points},
          {"alpha", config.nw.alpha},
          {"kernel", config.nw.kernel}};
  json breaks = json::array();
  for (const RegimeBreak& rb : config.regime_breaks)
    breaks.push_back(json{{"start_curve", rb.start_curve}, {"theta", rb.theta}});
  return json{{"name", config.name},
              {"model", model},
              {"n_per_curve", config.n_per_curve},
              {"n_curves", config.n_curves},
              {"regime_breaks", breaks},
              {"rm", rm},
              {"nw", nw},
              {"seed", config.seed},
              {"replicates", config.replicates},
              {"level", config.ci_level},
              {"cumulative_regimes", config.cumulative_regimes}};
}

json report_body(const RunReport& report) {
  json j;
  j["final_theta_hat"] = report.final_theta_hat;
  j["ci"] = report.ci ? ci_to_json(*report.ci) : json(nullptr);
  j["ci_known"] = report.ci_known ? ci_to_json(*report.ci_known) : json(nullptr);
  j["delta_hat"] = report.delta_hat ? json(*report.delta_hat) : json(nullptr);
  j["projection_count"] = report.projection_count;
  j["rm_state"] = state_to_json(report.rm_state);
  if (!report.first_regime_estimates.empty()) {
    j["regimes"] = json{{"first_estimates", report.first_regime_estimates},
                        {"last_estimates", report.last_regime_estimates}};
  } else {
    j["regimes"] = json(nullptr);
  }
  json diag = json::object();
  for (const auto& [key, value] : report.diagnostics) {
    diag[key] = std::isfinite(value) ? json(value) : json(nullptr);
  }
  j["diagnostics"] = diag;
  return j;
}

}  // namespace

std::string rm_state_to_json_string(const RMState& state) { return state_to_json(state).dump(2); }

RMState rm_state_from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DataError(std::string("rm state snapshot: ") + e.what());
  }
  if (j.contains("rm_state")) j = j["rm_state"];  // accept a full report too
  RMState state;
  try {
    state.theta_hat = j.at("theta_hat").get<double>();
    state.n = j.at("n").get<std::int64_t>();
    state.sum_t2 = j.at("sum_T2").get<double>();
    state.projection_count = j.at("projection_count").get<std::int64_t>();
    state.f1_hat = j.at("f1_hat").get<double>();
    if (!j.at("sign_frozen").is_null()) state.sign_frozen = j.at("sign_frozen").get<int>();
  } catch (const json::exception& e) {
    throw DataError(std::string("rm state snapshot: ") + e.what());
  }
  return state;
}

std::string report_to_json_string(const RunReport& report, const ScenarioConfig& config) {
  json j = report_body(report);
  j["scenario"] = scenario_to_json(config);
  return j.dump(2);
}

std::string report_to_json_string(const RunReport& report,
                                  const std::map<std::string, std::string>& echo) {
  json j = report_body(report);
  json scenario = json::object();
  for (const auto& [key, value] : echo) scenario[key] = value;
  j["scenario"] = scenario;
  return j.dump(2);
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open for writing: " + path);
  out << content;
  if (!out) throw DataError("write failed: " + path);
}

void write_trace_csv(const std::string& path, const std::string& value_column,
                     const std::vector<TracePoint>& trace) {
  std::ostringstream out;
  out << "n," << value_column << "\n";
  for (const TracePoint& p : trace) out << p.n << "," << format_double(p.value) << "\n";
  write_text_file(path, out.str());
}

void write_curve_csv(const std::string& path, const std::vector<CurvePoint>& curve) {
  std::ostringstream out;
  out << "x,f_hat,ci_lower,ci_upper\n";
  for (const CurvePoint& p : curve) {
    out << format_double(p.x) << ",";
    if (p.defined) {
      out << format_double(p.f_hat) << ",";
      if (p.has_band)
        out << format_double(p.ci_lower) << "," << format_double(p.ci_upper);
      else
        out << "nan,nan";
    } else {
      out << "nan,nan,nan";
    }
    out << "\n";
  }
  write_text_file(path, out.str());
}

}  // namespace shiftrm
