// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include "shiftrm/kernel.hpp"

#include <cmath>

#include "shiftrm/errors.hpp"
#include "shiftrm/quadrature.hpp"

namespace shiftrm {

KernelSpec uniform_kernel() {
  KernelSpec k;
  k.evaluator = [](double u) { return (u >= -1.0 && u <= 1.0) ? 0.5 : 0.0; };
  k.support_radius = 1.0;
  k.nu2 = 0.5;
  k.name = "uniform";
  return k;
}

KernelSpec epanechnikov_kernel() {
  KernelSpec k;
  k.evaluator = [](double u) { return (u >= -1.0 && u <= 1.0) ? 0.75 * (1.0 - u * u) : 0.0; };
  k.support_radius = 1.0;
  k.nu2 = 0.6;
  k.name = "epanechnikov";
  return k;
}

KernelSpec kernel_by_name(const std::string& name) {
  if (name == "uniform") return uniform_kernel();
  if (name == "epanechnikov") return epanechnikov_kernel();
  throw ConfigError("kernel: unknown name '" + name + "'");
}

void validate_kernel(const KernelSpec& kernel) {
  if (!kernel.evaluator) throw ConfigError("kernel: missing evaluator");
  if (!(kernel.support_radius > 0.0)) throw ConfigError("kernel: support_radius must be > 0");
  const double a = kernel.support_radius;
  for (int i = 0; i <= 200; ++i) {
    const double u = -a + 2.0 * a * static_cast<double>(i) / 200.0;
    const double v = kernel.evaluator(u);
    if (!std::isfinite(v) || v < 0.0) throw ConfigError("kernel: negative or non-finite value");
    if (std::abs(kernel.evaluator(-u) - v) > 1e-12) throw ConfigError("kernel: not symmetric");
  }
  if (std::abs(kernel.evaluator(a * (1.0 + 1e-9) + 1e-9)) != 0.0)
    throw ConfigError("kernel: nonzero outside declared support");
  const double mass = integrate(kernel.evaluator, -a, a).value;
  if (std::abs(mass - 1.0) > 1e-8) throw ConfigError("kernel: does not integrate to 1");
  const double m2 = integrate([&](double u) { return kernel.evaluator(u) * kernel.evaluator(u); },
                              -a, a)
                        .value;
  if (std::abs(m2 - kernel.nu2) > 1e-8) throw ConfigError("kernel: declared nu2 mismatch");
}

}  // namespace shiftrm
