// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace shiftrm {

// Step variants of the recursive shift estimator.
//
//   kSymmetricSign     symmetric shape; only the sign of f1 is known.
//   kNonsymmetric      general shape; f1 and g1 both known and enter the
//                      driving statistic.
//   kEfficientKnownF1  symmetric shape; gain rescaled by 1 / (2 pi |f1|),
//                      which attains the minimal asymptotic variance.
//   kEfficientAdaptive same rescaling with f1 replaced by a running
//                      estimate; the step uses the plain schedule until the
//                      estimate's magnitude clears a freeze threshold, then
//                      locks the sign and switches the scaling on.
enum class RMMode {
  kSymmetricSign,
  kNonsymmetric,
  kEfficientKnownF1,
  kEfficientAdaptive,
};

struct RMConfig {
  RMMode mode = RMMode::kSymmetricSign;

  int f1_sign = +1;     // kSymmetricSign, and kEfficientAdaptive before freeze
  double f1 = 0.0;      // kNonsymmetric, kEfficientKnownF1
  double g1 = 0.0;      // kNonsymmetric
  // Optional |f1| for plug-in variance in kSymmetricSign mode, where the
  // step itself never needs the magnitude.
  std::optional<double> known_f1;

  // Gain schedule gamma_n = gamma0 / n^exponent with 1/2 < exponent <= 1.
  double gamma0 = 1.0;
  double exponent = 1.0;

  double projection_radius = 0.25;
  double theta0 = 0.0;

  // kEfficientAdaptive: |f1_hat| must exceed this before the adaptive
  // scaling engages.
  double sign_freeze_threshold = 0.05;

  // Floor for the density value dividing the statistic.
  double g_min = 1e-6;
};

// ConfigError on violated field constraints; messages name the field.
void validate_rm_config(const RMConfig& config);

// Canonical mode names: "sign", "nonsym", "known", "adaptive".
std::string rm_mode_name(RMMode mode);
RMMode rm_mode_from_name(const std::string& name);

// Full estimator state after n steps.  The struct round-trips through the
// JSON snapshot bit-exactly.
struct RMState {
  double theta_hat = 0.0;
  std::int64_t n = 0;
  double sum_t2 = 0.0;  // running sum of squared driving statistics
  std::int64_t projection_count = 0;
  double f1_hat = 0.0;                   // adaptive mode's running estimate
  std::optional<int> sign_frozen;        // set once the adaptive sign locks
  std::optional<double> true_theta;      // simulation only
  double sum_sq_dev = 0.0;               // sum (theta_hat_k - theta)^2, k >= 1
};

RMState make_rm_state(const RMConfig& config, std::optional<double> true_theta = {});

// Clips x to [-radius, radius].
double project(double x, double radius);

// Driving statistic T for one observation, already divided by g(x):
//   symmetric variants:  sin(2 pi (x - theta_hat)) y / g(x)
//   non-symmetric:       (f1 sin(2 pi (x - theta_hat))
//                         - g1 cos(2 pi (x - theta_hat))) y / g(x)
// g_at_x below config.g_min throws DensityError identifying x.
double t_statistic(const RMConfig& config, const RMState& state, double x, double y,
                   double g_at_x);

// One projected stochastic-approximation step; pure value transition.
RMState rm_step(const RMConfig& config, const RMState& state, double x, double y,
                double g_at_x);

// Plug-in estimate of the asymptotic variance of sqrt(n)(theta_hat - theta)
// from the running second moment sum_t2 / n:
//   plain modes:      (sum_t2 / n) / (4 pi w - 1), w = |f1| or f1^2 + g1^2
//   efficient modes:  (sum_t2 / n) / (4 pi^2 f1^2)
// kSymmetricSign requires config.known_f1.  Non-positive denominators throw
// RateRegimeError.
double variance_estimate(const RMState& state, const RMConfig& config);

struct ConfidenceInterval {
  double lower = 0.0;
  double upper = 0.0;
  double level = 0.0;
  double variance = 0.0;  // asymptotic variance the width was derived from
};

// Two-sided normal interval theta_hat -+ q sqrt(variance / n) at the given
// coverage level.
ConfidenceInterval confidence_interval(const RMState& state, double variance, double level);

}  // namespace shiftrm
