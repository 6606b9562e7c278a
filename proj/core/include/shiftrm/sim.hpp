// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shiftrm/nw.hpp"
#include "shiftrm/rng.hpp"
#include "shiftrm/rm.hpp"
#include "shiftrm/scenario.hpp"

namespace shiftrm {

struct Observation {
  double x = 0.0;
  double y = 0.0;
};

// One draw from the model: x ~ g via inverse CDF, y = f(x - theta) + eps.
// Consumes exactly one uniform and one normal deviate.
Observation generate_observation(const ModelSpec& model, Rng& rng);

struct TracePoint {
  std::int64_t n = 0;
  double value = 0.0;
};

// Trace thinning shared by every runner: every step up to 10^4, then
// geometric spacing with ratio 1.05 (plus the forced final step).
class TraceThinner {
 public:
  bool due(std::int64_t n) {
    if (n <= 10000) return true;
    if (n < next_) return false;
    next_ = std::max(n + 1, static_cast<std::int64_t>(1.05 * static_cast<double>(n)) + 1);
    return true;
  }

 private:
  std::int64_t next_ = 10001;
};

struct CurvePoint {
  double x = 0.0;
  double f_hat = 0.0;
  double ci_lower = 0.0;
  double ci_upper = 0.0;
  bool defined = false;
  bool has_band = false;
};

// Everything a run produces.  Optional members are present exactly when the
// scenario makes them meaningful: ci_known needs the true model, delta_hat
// needs at least two regimes, the curve needs the smoother enabled.
struct RunReport {
  std::string scenario_name;
  double final_theta_hat = 0.0;
  std::optional<ConfidenceInterval> ci;        // plug-in variance
  std::optional<ConfidenceInterval> ci_known;  // known asymptotic variance
  std::optional<double> delta_hat;
  std::int64_t projection_count = 0;
  RMState rm_state;
  std::vector<TracePoint> theta_trace;
  std::vector<TracePoint> qsl_trace;  // running quadratic-deviation average / log n
  std::vector<CurvePoint> curve;
  // Curve-end shift estimates of the first and last regime (change runs).
  std::vector<double> first_regime_estimates;
  std::vector<double> last_regime_estimates;
  std::map<std::string, double> diagnostics;
};

// Runs one replicate of a single-regime scenario (theta fixed at
// model.theta for the whole stream).
RunReport run_experiment_single(const ScenarioConfig& config, int replicate = 0);

// Runs one replicate of a multi-regime scenario.  delta_hat is the mean of
// the last regime's curve-end estimates minus the mean of the first
// regime's.
RunReport run_experiment_change(const ScenarioConfig& config, int replicate = 0);

// Dispatches on regime_breaks.
RunReport run_scenario(const ScenarioConfig& config, int replicate = 0);

// All replicates, deterministically indexed; jobs > 1 distributes them over
// worker threads without changing any result.
std::vector<RunReport> run_replicates(const ScenarioConfig& config, int jobs = 1);

// Distributional check of the normalized estimation error across
// replicates.
struct CltDiagnostics {
  double target_variance = 0.0;     // known asymptotic variance used to standardize
  double z_mean = 0.0;              // mean of sqrt(n)(theta_hat - theta)/xi
  double z_variance = 0.0;          // should be near 1 under the CLT
  double ks_distance = 0.0;         // empirical vs standard normal
  std::vector<double> std_errors;   // the standardized errors themselves
  // Per grid node: sample variance of sqrt(n h_n)(f_hat - f)/v, when the
  // smoother is enabled.
  std::vector<double> curve_z_variance;
};

CltDiagnostics clt_diagnostic(const ScenarioConfig& config, int jobs = 1);

}  // namespace shiftrm
