// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>

namespace shiftrm {

// Symmetric smoothing kernel with compact support [-support_radius,
// support_radius] and unit mass.  nu2 = integral K^2, which enters the
// curve estimator's asymptotic variance.
struct KernelSpec {
  std::function<double(double)> evaluator;
  double support_radius = 1.0;
  double nu2 = 0.0;
  std::string name;
};

// K = 1/2 on [-1, 1]; nu2 = 1/2.
KernelSpec uniform_kernel();

// K = 3/4 (1 - u^2) on [-1, 1]; nu2 = 3/5.
KernelSpec epanechnikov_kernel();

// Lookup by name ("uniform" | "epanechnikov"); ConfigError otherwise.
KernelSpec kernel_by_name(const std::string& name);

// Probes symmetry, nonnegativity, support and the unit-mass / nu2
// quadratures; throws ConfigError on violation.
void validate_kernel(const KernelSpec& kernel);

}  // namespace shiftrm
