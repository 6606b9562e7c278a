// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <string>

namespace shiftrm {

// Periodic regression shape with period 1.
//
// `symmetric` declares evenness about 0; estimators branch on it, so the
// flag must be truthful (validate_shape probes it).  `bound` is a declared
// sup-norm bound on [-1/2, 1/2]; built-ins set it exactly, tabulated shapes
// set the probed maximum.
struct ShapeFunction {
  std::function<double(double)> evaluator;
  bool symmetric = false;
  double bound = 0.0;
  std::string description;
};

// Sum of the first p cosine harmonics, sum_{k=1}^{p} cos(2 pi k x).
ShapeFunction cosine_sum_shape(int p = 8);

// cos(2 pi x) + sin(2 pi x) + cos(2 pi x) sin(2 pi x); not symmetric.
ShapeFunction mixed_harmonic_shape();

ShapeFunction zero_shape();

// Periodic cubic interpolant (Catmull-Rom tangents) through the knots
// (xs[i], vs[i]); knots must be strictly increasing inside [-1/2, 1/2].
// The interpolant is extended with period 1, so the probe invariants hold
// by construction.
ShapeFunction tabulated_shape(std::span<const double> xs, std::span<const double> vs,
                              bool symmetric = false);

// Probes periodicity, the symmetry flag and the declared bound on a sample
// grid; throws ConfigError on violation.
void validate_shape(const ShapeFunction& shape, double tol = 1e-9);

}  // namespace shiftrm
