// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include "shiftrm/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "shiftrm/errors.hpp"
#include "shiftrm/quadrature.hpp"

namespace shiftrm {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double checked_density(const ModelSpec& spec, double x) {
  const double g = density_value(spec.g, x);
  if (g < spec.g.g_min * (1.0 - 1e-12)) {
    std::ostringstream msg;
    msg << "density below declared floor at x = " << x;
    throw DensityError(msg.str());
  }
  return g;
}

}  // namespace

FourierCoeffs fourier_coeffs(const ShapeFunction& f) {
  if (!f.evaluator) throw ConfigError("fourier_coeffs: missing evaluator");
  FourierCoeffs c;
  c.f1 = integrate([&](double x) { return std::cos(kTwoPi * x) * f.evaluator(x); }, -0.5, 0.5)
             .value;
  c.g1 = integrate([&](double x) { return std::sin(kTwoPi * x) * f.evaluator(x); }, -0.5, 0.5)
             .value;
  return c;
}

ModelSpec make_model_spec(ShapeFunction f, Density g, double sigma2, double theta) {
  validate_shape(f);
  validate_density(g);
  if (!(sigma2 >= 0.0)) throw ConfigError("model: sigma2 must be >= 0");
  if (!(std::abs(theta) < 0.25)) throw ConfigError("model: |theta| must be < 1/4");

  ModelSpec spec;
  spec.f = std::move(f);
  spec.g = std::move(g);
  spec.sigma2 = sigma2;
  spec.theta = theta;
  const FourierCoeffs c = fourier_coeffs(spec.f);
  spec.f1 = c.f1;
  spec.g1 = c.g1;
  if (spec.f.symmetric && std::abs(spec.g1) > 1e-8)
    throw ConfigError("model: symmetric flag contradicted by g1 != 0");
  if (spec.f1 * spec.f1 + spec.g1 * spec.g1 <= 1e-20)
    throw IdentifiabilityError("model: f1 = g1 = 0, the shift is not identifiable");
  return spec;
}

double phi_closed(const ModelSpec& spec, double t) {
  if (!spec.f.symmetric)
    throw VariantError("phi_closed: shape is not symmetric, use Phi_closed");
  return spec.f1 * std::sin(kTwoPi * (spec.theta - t));
}

double phi_quadrature(const ModelSpec& spec, double t) {
  return integrate(
             [&](double x) {
               return std::sin(kTwoPi * (x - t)) * spec.f.evaluator(x - spec.theta);
             },
             -0.5, 0.5)
      .value;
}

double Phi_closed(const ModelSpec& spec, double t) {
  const double w = spec.f1 * spec.f1 + spec.g1 * spec.g1;
  if (w <= 0.0) throw IdentifiabilityError("Phi_closed: f1 = g1 = 0");
  return w * std::sin(kTwoPi * (spec.theta - t));
}

double varphi_quadrature(const ModelSpec& spec, double t) {
  return integrate(
             [&](double x) {
               const double s = std::sin(kTwoPi * (x - t));
               const double fx = spec.f.evaluator(x - spec.theta);
               return s * s / checked_density(spec, x) * (fx * fx + spec.sigma2);
             },
             -0.5, 0.5)
      .value;
}

double Psi_quadrature(const ModelSpec& spec, double t) {
  return integrate(
             [&](double x) {
               const double s = spec.f1 * std::sin(kTwoPi * (x - t)) -
                                spec.g1 * std::cos(kTwoPi * (x - t));
               const double fx = spec.f.evaluator(x - spec.theta);
               return s * s / checked_density(spec, x) * (fx * fx + spec.sigma2);
             },
             -0.5, 0.5)
      .value;
}

double xi_squared(const ModelSpec& spec) {
  if (spec.f.symmetric) {
    const double rate = 4.0 * std::numbers::pi * std::abs(spec.f1) - 1.0;
    if (rate <= 0.0)
      throw RateRegimeError("xi_squared: 4 pi |f1| <= 1, slow-rate regime unsupported");
    return varphi_quadrature(spec, spec.theta) / rate;
  }
  const double w = spec.f1 * spec.f1 + spec.g1 * spec.g1;
  const double rate = 4.0 * std::numbers::pi * w - 1.0;
  if (rate <= 0.0)
    throw RateRegimeError("xi_squared: 4 pi (f1^2 + g1^2) <= 1, slow-rate regime unsupported");
  return Psi_quadrature(spec, spec.theta) / rate;
}

double xi_squared_efficient(const ModelSpec& spec) {
  if (!spec.f.symmetric)
    throw VariantError("xi_squared_efficient: defined for symmetric shapes only");
  if (spec.f1 == 0.0) throw IdentifiabilityError("xi_squared_efficient: f1 = 0");
  const double c = 2.0 * std::numbers::pi * spec.f1;
  return varphi_quadrature(spec, spec.theta) / (c * c);
}

double nw_asymptotic_variance_at(const ModelSpec& spec, double x, double alpha, double nu2,
                                 double center) {
  if (!(std::abs(x) <= 0.5)) throw ConfigError("nw_asymptotic_variance: |x| must be <= 1/2");
  if (!(alpha > 1.0 / 3.0 && alpha < 1.0))
    throw ConfigError("nw_asymptotic_variance: alpha must lie in (1/3, 1)");
  if (!(nu2 > 0.0)) throw ConfigError("nw_asymptotic_variance: nu2 must be positive");
  const double denom = x == 0.0
                           ? density_value(spec.g, center)
                           : density_value(spec.g, center + x) + density_value(spec.g, center - x);
  if (denom <= 0.0)
    throw DensityError("nw_asymptotic_variance: design density vanishes at both mirror points");
  return spec.sigma2 * nu2 / ((1.0 + alpha) * denom);
}

double nw_asymptotic_variance(const ModelSpec& spec, double x, double alpha, double nu2) {
  return nw_asymptotic_variance_at(spec, x, alpha, nu2, spec.theta);
}

ModelSpec experiment1_model(int p, double theta, double sigma2) {
  return make_model_spec(cosine_sum_shape(p), uniform_density(), sigma2, theta);
}

ModelSpec experiment2_model(double theta, double sigma2) {
  return make_model_spec(mixed_harmonic_shape(), uniform_density(), sigma2, theta);
}

}  // namespace shiftrm
