// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include "shiftrm/config.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "shiftrm/errors.hpp"
#include "shiftrm/ingest.hpp"

namespace shiftrm {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: field '" + key + "' expects a number, got '" + value + "'");
  }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: field '" + key + "' expects an integer, got '" + value + "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: field '" + key + "' expects an unsigned integer, got '" + value +
                      "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("config: field '" + key + "' expects true/false, got '" + value + "'");
}

// "start:theta,start:theta,..."
std::vector<RegimeBreak> parse_breaks(const std::string& key, const std::string& value) {
  std::vector<RegimeBreak> breaks;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ConfigError("config: field '" + key + "' expects start:theta pairs");
    RegimeBreak rb;
    rb.start_curve = static_cast<int>(parse_int(key, trim(item.substr(0, colon))));
    rb.theta = parse_double(key, trim(item.substr(colon + 1)));
    breaks.push_back(rb);
  }
  return breaks;
}

}  // namespace

ScenarioConfig parse_scenario_string(const std::string& text) {
  ScenarioConfig config;

  // Model assembly is deferred: shape and noise options may arrive in any
  // order before the model is built.
  std::string model_name = "experiment1";
  std::string shape_file, density_file;
  bool shape_symmetric = false;
  int shape_p = 8;
  double theta = 0.1;
  double sigma2 = 1.0;
  bool saw_sigma2 = false;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << "config: line " << line_no << " is not a key = value pair";
      throw ConfigError(msg.str());
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config: empty key");

    if (key == "name") config.name = value;
    else if (key == "model") model_name = value;
    else if (key == "shape_file") shape_file = value;
    else if (key == "density_file") density_file = value;
    else if (key == "shape_symmetric") shape_symmetric = parse_bool(key, value);
    else if (key == "shape_p") shape_p = static_cast<int>(parse_int(key, value));
    else if (key == "theta") theta = parse_double(key, value);
    else if (key == "sigma2") { sigma2 = parse_double(key, value); saw_sigma2 = true; }
    else if (key == "n_per_curve") config.n_per_curve = parse_int(key, value);
    else if (key == "n_curves") config.n_curves = static_cast<int>(parse_int(key, value));
    else if (key == "regime_breaks") config.regime_breaks = parse_breaks(key, value);
    else if (key == "cumulative_regimes") config.cumulative_regimes = parse_bool(key, value);
    else if (key == "rm_mode") config.rm.mode = rm_mode_from_name(value);
    else if (key == "f1_sign") {
      const std::int64_t s = parse_int(key, value);
      if (s != 1 && s != -1) throw ConfigError("config: field 'f1_sign' expects +1 or -1");
      config.rm.f1_sign = static_cast<int>(s);
    }
    else if (key == "f1") config.rm.f1 = parse_double(key, value);
    else if (key == "g1") config.rm.g1 = parse_double(key, value);
    else if (key == "known_f1") config.rm.known_f1 = parse_double(key, value);
    else if (key == "gamma0") config.rm.gamma0 = parse_double(key, value);
    else if (key == "exponent") config.rm.exponent = parse_double(key, value);
    else if (key == "projection_radius") config.rm.projection_radius = parse_double(key, value);
    else if (key == "theta0") config.rm.theta0 = parse_double(key, value);
    else if (key == "sign_freeze_threshold")
      config.rm.sign_freeze_threshold = parse_double(key, value);
    else if (key == "g_min") config.rm.g_min = parse_double(key, value);
    else if (key == "nw_enabled") config.nw.enabled = parse_bool(key, value);
    else if (key == "nw_grid_points") config.nw.grid_points = static_cast<int>(parse_int(key, value));
    else if (key == "nw_alpha") config.nw.alpha = parse_double(key, value);
    else if (key == "nw_kernel") config.nw.kernel = value;
    else if (key == "seed") config.seed = parse_u64(key, value);
    else if (key == "replicates") config.replicates = static_cast<int>(parse_int(key, value));
    else if (key == "level") config.ci_level = parse_double(key, value);
    else throw ConfigError("config: unknown field '" + key + "'");
  }

  ShapeFunction shape;
  Density density = uniform_density();
  if (!shape_file.empty()) {
    std::vector<double> xs, vs;
    load_table(shape_file, &xs, &vs);
    shape = tabulated_shape(xs, vs, shape_symmetric);
  } else if (model_name == "experiment1") {
    shape = cosine_sum_shape(shape_p);
  } else if (model_name == "experiment2") {
    shape = mixed_harmonic_shape();
    if (!saw_sigma2) sigma2 = 0.2;  // this benchmark's default noise level
  } else {
    throw ConfigError("config: field 'model' expects experiment1|experiment2, got '" +
                      model_name + "'");
  }
  if (!density_file.empty()) {
    std::vector<double> xs, vs;
    load_table(density_file, &xs, &vs);
    density = tabulated_density(xs, vs, config.rm.g_min);
  }
  config.model = make_model_spec(std::move(shape), std::move(density), sigma2, theta);

  validate_scenario(config);
  return config;
}

ScenarioConfig parse_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_string(buf.str());
}

}  // namespace shiftrm
