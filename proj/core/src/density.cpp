// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include "shiftrm/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

#include "shiftrm/errors.hpp"
#include "shiftrm/quadrature.hpp"

namespace shiftrm {

double density_value(const Density& g, double x) {
  if (x < -0.5 || x > 0.5) return 0.0;
  return g.evaluator(x);
}

Density uniform_density() {
  Density g;
  g.evaluator = [](double x) { return (x >= -0.5 && x <= 0.5) ? 1.0 : 0.0; };
  g.g_min = 1.0;
  g.inverse_cdf = [](double u) { return u - 0.5; };
  g.description = "uniform";
  return g;
}

namespace {

// Piecewise-linear density with its exact piecewise-quadratic CDF inverse.
struct LinearDensity {
  std::vector<double> xs, vs, cum;  // cum[i] = CDF at xs[i]

  double value(double x) const {
    if (x < xs.front() || x > xs.back()) return 0.0;
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t i = static_cast<std::size_t>(it - xs.begin());
    if (i == 0) return vs.front();
    if (i == xs.size()) return vs.back();
    --i;
    const double w = (x - xs[i]) / (xs[i + 1] - xs[i]);
    return vs[i] + w * (vs[i + 1] - vs[i]);
  }

  double inverse(double u) const {
    u = std::min(std::max(u, 0.0), 1.0);
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    std::size_t i = static_cast<std::size_t>(it - cum.begin());
    if (i == 0) return xs.front();
    if (i >= xs.size()) return xs.back();
    --i;
    const double dx = xs[i + 1] - xs[i];
    const double slope = (vs[i + 1] - vs[i]) / dx;
    const double rest = u - cum[i];
    double t;
    if (std::abs(slope) < 1e-14 * std::max(1.0, vs[i])) {
      t = rest / vs[i];
    } else {
      // Solve v_i t + slope t^2 / 2 = rest for t in [0, dx].
      const double disc = vs[i] * vs[i] + 2.0 * slope * rest;
      t = (-vs[i] + std::sqrt(std::max(disc, 0.0))) / slope;
    }
    return xs[i] + std::min(std::max(t, 0.0), dx);
  }
};

}  // namespace

Density tabulated_density(std::span<const double> xs, std::span<const double> vs, double g_min) {
  if (xs.size() != vs.size()) throw ConfigError("tabulated_density: column length mismatch");
  if (xs.size() < 2) throw ConfigError("tabulated_density: need at least two knots");
  if (std::abs(xs.front() + 0.5) > 1e-9 || std::abs(xs.back() - 0.5) > 1e-9)
    throw ConfigError("tabulated_density: knots must span [-1/2, 1/2]");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0 && !(xs[i] > xs[i - 1]))
      throw ConfigError("tabulated_density: knots must be strictly increasing");
    if (!(vs[i] > 0.0)) throw ConfigError("tabulated_density: values must be positive");
  }

  LinearDensity d;
  d.xs.assign(xs.begin(), xs.end());
  d.xs.front() = -0.5;
  d.xs.back() = 0.5;
  d.vs.assign(vs.begin(), vs.end());

  // Renormalize to unit mass (exact integral of the linear interpolant).
  double mass = 0.0;
  for (std::size_t i = 0; i + 1 < d.xs.size(); ++i)
    mass += 0.5 * (d.vs[i] + d.vs[i + 1]) * (d.xs[i + 1] - d.xs[i]);
  for (auto& v : d.vs) v /= mass;

  d.cum.resize(d.xs.size());
  d.cum[0] = 0.0;
  for (std::size_t i = 0; i + 1 < d.xs.size(); ++i)
    d.cum[i + 1] = d.cum[i] + 0.5 * (d.vs[i] + d.vs[i + 1]) * (d.xs[i + 1] - d.xs[i]);
  d.cum.back() = 1.0;

  double low = d.vs.front();
  for (double v : d.vs) low = std::min(low, v);
  if (low < g_min) {
    std::ostringstream msg;
    msg << "tabulated_density: minimum value " << low << " below floor " << g_min;
    throw ConfigError(msg.str());
  }

  Density g;
  g.evaluator = [d](double x) { return d.value(x); };
  g.inverse_cdf = [d](double u) { return d.inverse(u); };
  g.g_min = g_min;
  std::ostringstream desc;
  desc << "tabulated(knots=" << xs.size() << ")";
  g.description = desc.str();
  return g;
}

void validate_density(const Density& g) {
  if (!g.evaluator) throw ConfigError("density: missing evaluator");
  if (!g.inverse_cdf) throw ConfigError("density: missing inverse_cdf");
  if (!(g.g_min > 0.0)) throw ConfigError("density: g_min must be positive");
  for (int i = 0; i <= 400; ++i) {
    const double x = -0.5 + static_cast<double>(i) / 400.0;
    const double v = g.evaluator(x);
    if (!std::isfinite(v)) throw ConfigError("density: non-finite value in probe");
    if (v < g.g_min * (1.0 - 1e-12))
      throw ConfigError("density: value below declared g_min on the support");
  }
  const double mass = integrate([&](double x) { return g.evaluator(x); }, -0.5, 0.5).value;
  if (std::abs(mass - 1.0) > 1e-8)
    throw ConfigError("density: evaluator does not integrate to 1 over [-1/2, 1/2]");
}

}  // namespace shiftrm
