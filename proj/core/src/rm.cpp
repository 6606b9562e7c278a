// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include "shiftrm/rm.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "shiftrm/errors.hpp"
#include "shiftrm/stats.hpp"

namespace shiftrm {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int sign_of(double v) { return v < 0.0 ? -1 : +1; }

// Step direction and extra gain factor for the current mode and state.
void direction_and_scale(const RMConfig& config, const RMState& state, int* direction,
                         double* scale) {
  *scale = 1.0;
  switch (config.mode) {
    case RMMode::kSymmetricSign:
      *direction = config.f1_sign;
      break;
    case RMMode::kNonsymmetric:
      // The statistic already carries f1 and g1; no sign correction.
      *direction = +1;
      break;
    case RMMode::kEfficientKnownF1:
      *direction = sign_of(config.f1);
      *scale = 1.0 / (kTwoPi * std::abs(config.f1));
      break;
    case RMMode::kEfficientAdaptive:
      if (state.sign_frozen) {
        *direction = *state.sign_frozen;
        *scale = 1.0 / (kTwoPi * std::abs(state.f1_hat));
      } else {
        // Warm-up: plain schedule driven by the configured sign guess.
        *direction = config.f1_sign;
      }
      break;
  }
}

}  // namespace

void validate_rm_config(const RMConfig& config) {
  if (config.f1_sign != 1 && config.f1_sign != -1)
    throw ConfigError("rm: f1_sign must be +1 or -1");
  if (!(config.gamma0 > 0.0)) throw ConfigError("rm: gamma0 must be > 0");
  if (!(config.exponent > 0.5 && config.exponent <= 1.0))
    throw ConfigError("rm: exponent must lie in (1/2, 1]");
  if (!(config.projection_radius > 0.0)) throw ConfigError("rm: projection_radius must be > 0");
  if (!(std::abs(config.theta0) <= config.projection_radius))
    throw ConfigError("rm: theta0 must lie inside the projection interval");
  if (!(config.g_min > 0.0)) throw ConfigError("rm: g_min must be > 0");
  if (config.mode == RMMode::kNonsymmetric &&
      config.f1 * config.f1 + config.g1 * config.g1 <= 0.0)
    throw ConfigError("rm: nonsymmetric mode needs f1 or g1 nonzero");
  if (config.mode == RMMode::kEfficientKnownF1 && config.f1 == 0.0)
    throw ConfigError("rm: efficient mode needs f1 != 0");
  if (config.mode == RMMode::kEfficientAdaptive && !(config.sign_freeze_threshold > 0.0))
    throw ConfigError("rm: sign_freeze_threshold must be > 0");
  if (config.known_f1 && !(*config.known_f1 > 0.0))
    throw ConfigError("rm: known_f1 must be > 0 (magnitude of f1)");
}

std::string rm_mode_name(RMMode mode) {
  switch (mode) {
    case RMMode::kSymmetricSign:
      return "sign";
    case RMMode::kNonsymmetric:
      return "nonsym";
    case RMMode::kEfficientKnownF1:
      return "known";
    case RMMode::kEfficientAdaptive:
      return "adaptive";
  }
  throw ConfigError("rm: unknown mode");
}

RMMode rm_mode_from_name(const std::string& name) {
  if (name == "sign") return RMMode::kSymmetricSign;
  if (name == "nonsym") return RMMode::kNonsymmetric;
  if (name == "known") return RMMode::kEfficientKnownF1;
  if (name == "adaptive") return RMMode::kEfficientAdaptive;
  throw ConfigError("rm: unknown mode '" + name + "' (sign|nonsym|known|adaptive)");
}

RMState make_rm_state(const RMConfig& config, std::optional<double> true_theta) {
  validate_rm_config(config);
  RMState state;
  state.theta_hat = config.theta0;
  state.true_theta = true_theta;
  return state;
}

double project(double x, double radius) {
  if (x > radius) return radius;
  if (x < -radius) return -radius;
  return x;
}

double t_statistic(const RMConfig& config, const RMState& state, double x, double y,
                   double g_at_x) {
  if (!(g_at_x >= config.g_min)) {
    std::ostringstream msg;
    msg << "t_statistic: density value " << g_at_x << " below floor at x = " << x;
    throw DensityError(msg.str());
  }
  const double angle = kTwoPi * (x - state.theta_hat);
  if (config.mode == RMMode::kNonsymmetric)
    return (config.f1 * std::sin(angle) - config.g1 * std::cos(angle)) * y / g_at_x;
  return std::sin(angle) * y / g_at_x;
}

RMState rm_step(const RMConfig& config, const RMState& state, double x, double y,
                double g_at_x) {
  const double t = t_statistic(config, state, x, y, g_at_x);

  int direction = +1;
  double scale = 1.0;
  direction_and_scale(config, state, &direction, &scale);

  RMState next = state;
  next.n = state.n + 1;
  const double gamma =
      config.gamma0 / std::pow(static_cast<double>(next.n), config.exponent) * scale;
  const double unprojected = state.theta_hat + direction * gamma * t;
  next.theta_hat = project(unprojected, config.projection_radius);
  if (std::abs(unprojected) > config.projection_radius) ++next.projection_count;
  next.sum_t2 = state.sum_t2 + t * t;

  if (config.mode == RMMode::kEfficientAdaptive) {
    // Running average of y cos(2 pi (x - theta_hat_{k-1})) / g(x); uses the
    // pre-update estimate, so the k-th term is measurable at step k.
    const double c = y * std::cos(kTwoPi * (x - state.theta_hat)) / g_at_x;
    next.f1_hat = state.f1_hat + (c - state.f1_hat) / static_cast<double>(next.n);
    if (!next.sign_frozen && std::abs(next.f1_hat) > config.sign_freeze_threshold)
      next.sign_frozen = sign_of(next.f1_hat);
  }

  if (state.true_theta) {
    const double dev = next.theta_hat - *state.true_theta;
    next.sum_sq_dev = state.sum_sq_dev + dev * dev;
  }
  return next;
}

double variance_estimate(const RMState& state, const RMConfig& config) {
  if (state.n < 1) throw ConfigError("variance_estimate: no observations");
  const double second_moment = state.sum_t2 / static_cast<double>(state.n);
  switch (config.mode) {
    case RMMode::kSymmetricSign: {
      if (!config.known_f1)
        throw ConfigError(
            "variance_estimate: sign mode needs known_f1 for the plug-in variance");
      const double rate = 2.0 * kTwoPi * *config.known_f1 - 1.0;
      if (rate <= 0.0) throw RateRegimeError("variance_estimate: 4 pi |f1| <= 1");
      return second_moment / rate;
    }
    case RMMode::kNonsymmetric: {
      const double w = config.f1 * config.f1 + config.g1 * config.g1;
      const double rate = 2.0 * kTwoPi * w - 1.0;
      if (rate <= 0.0) throw RateRegimeError("variance_estimate: 4 pi (f1^2 + g1^2) <= 1");
      return second_moment / rate;
    }
    case RMMode::kEfficientKnownF1: {
      const double c = kTwoPi * config.f1;
      return second_moment / (c * c);
    }
    case RMMode::kEfficientAdaptive: {
      if (std::abs(state.f1_hat) <= 0.0)
        throw IdentifiabilityError("variance_estimate: adaptive f1 estimate is zero");
      const double c = kTwoPi * state.f1_hat;
      return second_moment / (c * c);
    }
  }
  throw ConfigError("variance_estimate: unknown mode");
}

ConfidenceInterval confidence_interval(const RMState& state, double variance, double level) {
  if (state.n < 1) throw ConfigError("confidence_interval: no observations");
  if (!(variance >= 0.0)) throw ConfigError("confidence_interval: variance must be >= 0");
  if (!(level > 0.0 && level < 1.0)) throw ConfigError("confidence_interval: level in (0, 1)");
  const double q = normal_quantile(0.5 + 0.5 * level);
  const double half = q * std::sqrt(variance / static_cast<double>(state.n));
  return {state.theta_hat - half, state.theta_hat + half, level, variance};
}

}  // namespace shiftrm
