// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <string>

namespace shiftrm {

// Design density of the observation points, supported on [-1/2, 1/2].
//
// The estimator divides by g(X), so g must stay above g_min on the whole
// support.  inverse_cdf maps u in [0, 1) to the support and is what the
// simulator samples from.
struct Density {
  std::function<double(double)> evaluator;
  double g_min = 1e-6;
  std::function<double(double)> inverse_cdf;
  std::string description;
};

// Evaluates g with the support convention enforced: 0 outside [-1/2, 1/2].
double density_value(const Density& g, double x);

Density uniform_density();

// Piecewise-linear density through (xs[i], vs[i]).  Knots must span
// [-1/2, 1/2]; values are renormalized to unit mass.  Sampling inverts the
// piecewise-quadratic CDF exactly.
Density tabulated_density(std::span<const double> xs, std::span<const double> vs,
                          double g_min = 1e-6);

// Probes unit mass (quadrature within 1e-8) and the g_min floor on a dense
// grid; throws ConfigError on violation.
void validate_density(const Density& g);

}  // namespace shiftrm
