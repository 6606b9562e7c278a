// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include "shiftrm/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "shiftrm/errors.hpp"

namespace shiftrm {
namespace {

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
// Legendre recurrence.  Order 20 integrates polynomials up to degree 39
// exactly; panel doubling handles everything else.
struct GaussLegendre {
  std::vector<double> node;
  std::vector<double> weight;

  explicit GaussLegendre(int order) : node(order), weight(order) {
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < order; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
        }
        pp = order * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / pp;
        z -= dz;
        if (std::abs(dz) < 1e-15) break;
      }
      node[i] = -z;
      node[order - 1 - i] = z;
      weight[i] = 2.0 / ((1.0 - z * z) * pp * pp);
      weight[order - 1 - i] = weight[i];
    }
  }
};

double composite(const GaussLegendre& rule, const std::function<double(double)>& f, double a,
                 double b, int panels) {
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    const double half = 0.5 * width;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.node.size(); ++i) {
      const double v = f(mid + half * rule.node[i]);
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "integrate: non-finite integrand value at x = " << mid + half * rule.node[i];
        throw NumericError(msg.str());
      }
      acc += rule.weight[i] * v;
    }
    total += half * acc;
  }
  return total;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double target, double accept, int max_panels) {
  if (!(b > a)) throw ConfigError("integrate: requires b > a");
  static const GaussLegendre rule(20);

  double previous = composite(rule, f, a, b, 1);
  int panels = 2;
  double value = previous;
  double residual = std::abs(value);
  for (; panels <= max_panels; panels *= 2) {
    value = composite(rule, f, a, b, panels);
    residual = std::abs(value - previous);
    if (residual <= target) return {value, residual, panels};
    previous = value;
  }
  if (residual <= accept) return {value, residual, max_panels};
  std::ostringstream msg;
  msg << "integrate: no convergence after " << max_panels << " panels, residual " << residual;
  throw NumericError(msg.str());
}

}  // namespace shiftrm
