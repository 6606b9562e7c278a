// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "shiftrm/density.hpp"
#include "shiftrm/shape.hpp"

namespace shiftrm {

// Observation model y = f(x - theta) + noise, x drawn from g.
//
// f1 and g1 are the first cosine/sine Fourier coefficients of f,
//   f1 = integral cos(2 pi x) f(x) dx,   g1 = integral sin(2 pi x) f(x) dx
// over one period.  They drive both the drift of the shift estimator and
// every closed-form variance below, so make_model_spec computes them once
// and validates them; code paths that need a degenerate model (f identically
// zero, say) can still aggregate-initialize the struct directly.
struct ModelSpec {
  ShapeFunction f;
  Density g;
  double sigma2 = 1.0;  // noise variance, >= 0
  double theta = 0.0;   // true shift, |theta| < 1/4; used by simulation only
  double f1 = 0.0;
  double g1 = 0.0;
};

struct FourierCoeffs {
  double f1 = 0.0;
  double g1 = 0.0;
};

// First-harmonic Fourier coefficients of the shape by quadrature.
FourierCoeffs fourier_coeffs(const ShapeFunction& f);

// Validating constructor: checks the shape probes, the density probes,
// sigma2 >= 0 and |theta| < 1/4, computes f1/g1, and rejects models with
// f1 = g1 = 0 (IdentifiabilityError) or a symmetric flag contradicted by
// g1 != 0 (ConfigError).
ModelSpec make_model_spec(ShapeFunction f, Density g, double sigma2, double theta);

// Mean field of the driving statistic for the symmetric variant,
//   phi(t) = f1 sin(2 pi (theta - t)).
// Requires f.symmetric; otherwise VariantError points at Phi_closed.
double phi_closed(const ModelSpec& spec, double t);

// Same mean field evaluated directly as an integral (the design density
// cancels); agreement with phi_closed is the standing cross-check.
double phi_quadrature(const ModelSpec& spec, double t);

// Mean field of the non-symmetric variant's statistic,
//   Phi(t) = (f1^2 + g1^2) sin(2 pi (theta - t)).
// Requires f1^2 + g1^2 > 0 (IdentifiabilityError).
double Phi_closed(const ModelSpec& spec, double t);

// Second moment of the symmetric variant's statistic at shift hypothesis t,
//   varphi(t) = integral sin^2(2 pi (x - t)) / g(x) * (f^2(x - theta) + sigma2) dx.
double varphi_quadrature(const ModelSpec& spec, double t);

// Second moment of the non-symmetric variant's statistic,
//   Psi(t) = integral (f1 sin(2 pi (x-t)) - g1 cos(2 pi (x-t)))^2 / g(x)
//            * (f^2(x - theta) + sigma2) dx.
double Psi_quadrature(const ModelSpec& spec, double t);

// Asymptotic variance of sqrt(n) (theta_hat - theta) for the plain
// (unscaled) step.  Symmetric shapes:   varphi(theta) / (4 pi |f1| - 1),
// non-symmetric shapes:                 Psi(theta) / (4 pi (f1^2+g1^2) - 1).
// The denominator must be positive (RateRegimeError otherwise: the
// slow-rate regime is out of scope).
double xi_squared(const ModelSpec& spec);

// Asymptotic variance under the efficient step scaling 1 / (2 pi |f1|):
//   varphi(theta) / (4 pi^2 f1^2).
// Symmetric shapes only (VariantError), f1 != 0 (IdentifiabilityError).
double xi_squared_efficient(const ModelSpec& spec);

// Asymptotic variance of the symmetrized curve estimator at grid point x
// with bandwidth exponent alpha and kernel second moment nu2:
//   sigma2 nu2 / ((1 + alpha) (g(theta + x) + g(theta - x)))   for x != 0,
//   sigma2 nu2 / ((1 + alpha) g(theta))                        at  x  = 0.
// Requires |x| <= 1/2 and 1/3 < alpha < 1 (the band-validity range).
// Zero denominator throws DensityError.
double nw_asymptotic_variance(const ModelSpec& spec, double x, double alpha, double nu2);

// Same, with the centering point supplied explicitly (plug-in bands use the
// estimated shift).
double nw_asymptotic_variance_at(const ModelSpec& spec, double x, double alpha, double nu2,
                                 double center);

// Built-in benchmark models.
ModelSpec experiment1_model(int p = 8, double theta = 0.1, double sigma2 = 1.0);
ModelSpec experiment2_model(double theta = 0.1, double sigma2 = 0.2);

}  // namespace shiftrm
