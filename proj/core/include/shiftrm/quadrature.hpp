// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

namespace shiftrm {

struct QuadratureResult {
  double value = 0.0;
  double residual = 0.0;  // |last - previous| panel-doubling difference
  int panels = 0;
};

// Composite Gauss-Legendre integration of f over [a, b].
//
// The panel count doubles until two successive composite estimates agree to
// `target` (absolute).  If the cap is reached the result is still accepted
// when the residual is within `accept`; otherwise a NumericError carrying
// the residual estimate is thrown.  Non-finite integrand values throw
// NumericError immediately.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double target = 1e-11, double accept = 1e-8, int max_panels = 512);

}  // namespace shiftrm
