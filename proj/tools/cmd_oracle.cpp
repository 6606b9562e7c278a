// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "commands.hpp"
#include "shiftrm/errors.hpp"
#include "shiftrm/kernel.hpp"
#include "shiftrm/model.hpp"

namespace shiftrm::cli {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void print_grid(const OracleOptions& options, const char* column,
                const std::optional<double>& single,
                const std::function<double(double)>& fn) {
  if (single) {
    std::cout << column << ",value\n" << fmt(*single) << "," << fmt(fn(*single)) << "\n";
    return;
  }
  if (!(options.grid_count >= 1)) throw ConfigError("oracle: grid count must be >= 1");
  if (!(options.grid_min <= options.grid_max))
    throw ConfigError("oracle: grid minimum exceeds maximum");
  std::cout << column << ",value\n";
  for (int i = 0; i < options.grid_count; ++i) {
    const double u = options.grid_count == 1
                         ? options.grid_min
                         : options.grid_min + (options.grid_max - options.grid_min) *
                                                  static_cast<double>(i) /
                                                  static_cast<double>(options.grid_count - 1);
    std::cout << fmt(u) << "," << fmt(fn(u)) << "\n";
  }
}

}  // namespace

int cmd_oracle(const OracleOptions& options) {
  ModelSpec spec;
  if (options.model == "experiment1") {
    spec = experiment1_model(options.shape_p, options.theta.value_or(0.1),
                             options.sigma2.value_or(1.0));
  } else if (options.model == "experiment2") {
    spec = experiment2_model(options.theta.value_or(0.1), options.sigma2.value_or(0.2));
  } else {
    throw ConfigError("oracle: unknown model '" + options.model +
                      "' (experiment1|experiment2)");
  }

  const std::string& fn = options.fn;
  if (fn == "xi2") {
    std::cout << fmt(xi_squared(spec)) << "\n";
  } else if (fn == "xi2-eff") {
    std::cout << fmt(xi_squared_efficient(spec)) << "\n";
  } else if (fn == "phi") {
    print_grid(options, "t", options.t, [&](double t) { return phi_closed(spec, t); });
  } else if (fn == "phi-quad") {
    print_grid(options, "t", options.t, [&](double t) { return phi_quadrature(spec, t); });
  } else if (fn == "Phi") {
    print_grid(options, "t", options.t, [&](double t) { return Phi_closed(spec, t); });
  } else if (fn == "varphi") {
    print_grid(options, "t", options.t, [&](double t) { return varphi_quadrature(spec, t); });
  } else if (fn == "Psi") {
    print_grid(options, "t", options.t, [&](double t) { return Psi_quadrature(spec, t); });
  } else if (fn == "nw-var") {
    const KernelSpec kernel = kernel_by_name(options.kernel);
    print_grid(options, "x", options.x, [&](double x) {
      return nw_asymptotic_variance(spec, x, options.alpha, kernel.nu2);
    });
  } else {
    throw ConfigError("oracle: unknown fn '" + fn +
                      "' (phi|phi-quad|Phi|varphi|Psi|xi2|xi2-eff|nw-var)");
  }
  return 0;
}

}  // namespace shiftrm::cli
