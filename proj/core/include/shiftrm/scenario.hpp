// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shiftrm/model.hpp"
#include "shiftrm/rm.hpp"

namespace shiftrm {

// Shift regime starting at a zero-based curve index.
struct RegimeBreak {
  int start_curve = 0;
  double theta = 0.0;
};

struct NWSettings {
  bool enabled = true;
  int grid_points = 101;
  double alpha = 0.9;
  std::string kernel = "uniform";
};

// Complete description of a simulation run.
//
// regime_breaks empty means a single regime at model.theta.  Otherwise the
// breaks list every regime in order, the first starting at curve 0; the
// shift estimator restarts from theta0 at each regime boundary unless
// cumulative_regimes keeps its state across it.
struct ScenarioConfig {
  std::string name = "scenario";
  ModelSpec model;
  std::int64_t n_per_curve = 1000;
  int n_curves = 1;
  std::vector<RegimeBreak> regime_breaks;
  RMConfig rm;
  NWSettings nw;
  std::uint64_t seed = 0;
  int replicates = 1;
  double ci_level = 0.95;
  bool cumulative_regimes = false;
};

// ConfigError on violated constraints; messages name the offending field.
void validate_scenario(const ScenarioConfig& config);

}  // namespace shiftrm
