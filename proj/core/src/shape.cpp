// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include "shiftrm/shape.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <vector>

#include "shiftrm/errors.hpp"

namespace shiftrm {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Periodic cubic Hermite interpolant with Catmull-Rom style tangents on a
// non-uniform knot set; period 1.
class PeriodicCubic {
 public:
  PeriodicCubic(std::vector<double> xs, std::vector<double> vs)
      : xs_(std::move(xs)), vs_(std::move(vs)) {
    const std::size_t m = xs_.size();
    tan_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double xl = knot_x(static_cast<std::ptrdiff_t>(i) - 1);
      const double xr = knot_x(i + 1);
      const double vl = vs_[(i + m - 1) % m];
      const double vr = vs_[(i + 1) % m];
      tan_[i] = (vr - vl) / (xr - xl);
    }
  }

  double operator()(double x) const {
    const std::size_t m = xs_.size();
    // Wrap into [xs_[0], xs_[0] + 1).
    double t = x - std::floor(x - xs_[0]);
    auto it = std::upper_bound(xs_.begin(), xs_.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
    const double x0 = xs_[i];
    const double x1 = knot_x(i + 1);
    const double hseg = x1 - x0;
    const double u = (t - x0) / hseg;
    const double v0 = vs_[i];
    const double v1 = vs_[(i + 1) % m];
    const double m0 = tan_[i] * hseg;
    const double m1 = tan_[(i + 1) % m] * hseg;
    const double u2 = u * u;
    const double u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * v0 + (u3 - 2 * u2 + u) * m0 + (-2 * u3 + 3 * u2) * v1 +
           (u3 - u2) * m1;
  }

 private:
  // Knot abscissa with periodic extension by +-1.
  double knot_x(std::ptrdiff_t i) const {
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(xs_.size());
    if (i < 0) return xs_[static_cast<std::size_t>(i + m)] - 1.0;
    if (i >= m) return xs_[static_cast<std::size_t>(i - m)] + 1.0;
    return xs_[static_cast<std::size_t>(i)];
  }

  std::vector<double> xs_, vs_;
  std::vector<double> tan_;
};

// 2049 = 32 * 64 + 1 keeps validate_shape's probe points inside this grid.
double probed_bound(const std::function<double(double)>& f, int samples = 2049) {
  double b = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = -0.5 + static_cast<double>(i) / (samples - 1);
    b = std::max(b, std::abs(f(x)));
  }
  return b;
}

}  // namespace

ShapeFunction cosine_sum_shape(int p) {
  if (p < 1) throw ConfigError("cosine_sum_shape: p must be >= 1");
  ShapeFunction s;
  s.evaluator = [p](double x) {
    double acc = 0.0;
    for (int k = 1; k <= p; ++k) acc += std::cos(kTwoPi * k * x);
    return acc;
  };
  s.symmetric = true;
  s.bound = static_cast<double>(p);
  std::ostringstream d;
  d << "cosine_sum(p=" << p << ")";
  s.description = d.str();
  return s;
}

ShapeFunction mixed_harmonic_shape() {
  ShapeFunction s;
  s.evaluator = [](double x) {
    const double c = std::cos(kTwoPi * x);
    const double v = std::sin(kTwoPi * x);
    return c + v + c * v;
  };
  s.symmetric = false;
  s.bound = 2.0;  // |cos + sin| <= sqrt(2), |cos sin| <= 1/2
  s.description = "mixed_harmonic";
  return s;
}

ShapeFunction zero_shape() {
  ShapeFunction s;
  s.evaluator = [](double) { return 0.0; };
  s.symmetric = true;
  s.bound = 0.0;
  s.description = "zero";
  return s;
}

ShapeFunction tabulated_shape(std::span<const double> xs, std::span<const double> vs,
                              bool symmetric) {
  if (xs.size() != vs.size()) throw ConfigError("tabulated_shape: column length mismatch");
  if (xs.size() < 3) throw ConfigError("tabulated_shape: need at least three knots");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < -0.5 || xs[i] > 0.5)
      throw ConfigError("tabulated_shape: knots must lie in [-1/2, 1/2]");
    if (i > 0 && !(xs[i] > xs[i - 1]))
      throw ConfigError("tabulated_shape: knots must be strictly increasing");
  }
  // A knot at both endpoints would be duplicated by periodic extension.
  std::vector<double> kx(xs.begin(), xs.end());
  std::vector<double> kv(vs.begin(), vs.end());
  if (kx.front() == -0.5 && kx.back() == 0.5) {
    kx.pop_back();
    kv.pop_back();
  }
  PeriodicCubic cubic(std::move(kx), std::move(kv));
  ShapeFunction s;
  s.evaluator = [cubic](double x) { return cubic(x); };
  s.symmetric = symmetric;
  s.bound = probed_bound(s.evaluator) + 1e-9;
  std::ostringstream d;
  d << "tabulated(knots=" << xs.size() << ")";
  s.description = d.str();
  return s;
}

void validate_shape(const ShapeFunction& shape, double tol) {
  if (!shape.evaluator) throw ConfigError("shape: missing evaluator");
  const double scale = std::max(1.0, shape.bound);
  for (int i = 0; i <= 64; ++i) {
    const double x = -0.5 + static_cast<double>(i) / 64.0;
    const double v = shape.evaluator(x);
    if (!std::isfinite(v)) throw ConfigError("shape: non-finite value in probe");
    if (std::abs(shape.evaluator(x + 1.0) - v) > tol * scale)
      throw ConfigError("shape: period-1 probe failed");
    if (shape.symmetric && std::abs(shape.evaluator(-x) - v) > tol * scale)
      throw ConfigError("shape: symmetric flag contradicted by evaluator");
    if (shape.bound > 0.0 && std::abs(v) > shape.bound * (1.0 + 1e-12) + tol)
      throw ConfigError("shape: declared bound exceeded");
  }
}

}  // namespace shiftrm
