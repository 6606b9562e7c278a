// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include "shiftrm/nw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "shiftrm/errors.hpp"
#include "shiftrm/stats.hpp"

namespace shiftrm {

std::vector<double> symmetric_grid(int points) {
  if (points < 2) throw ConfigError("symmetric_grid: need at least two points");
  std::vector<double> grid(points);
  const double half_span = static_cast<double>(points - 1) / 2.0;
  for (int j = 0; j < points; ++j) {
    // (j - half_span) is exact, so grid[points-1-j] == -grid[j] bitwise.
    grid[j] = (static_cast<double>(j) - half_span) / static_cast<double>(points - 1);
  }
  return grid;
}

NWState make_nw_state(std::vector<double> grid, double alpha) {
  if (grid.size() < 2) throw ConfigError("nw: grid needs at least two points");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("nw: alpha must lie in (0, 1)");
  for (std::size_t j = 0; j + 1 < grid.size(); ++j)
    if (!(grid[j] < grid[j + 1])) throw ConfigError("nw: grid must be strictly increasing");
  for (std::size_t j = 0; j < grid.size(); ++j)
    if (grid[j] != -grid[grid.size() - 1 - j])
      throw ConfigError("nw: grid must mirror exactly about 0");
  NWState state;
  state.num.assign(grid.size(), 0.0);
  state.den.assign(grid.size(), 0.0);
  state.grid = std::move(grid);
  state.alpha = alpha;
  return state;
}

double nw_weight(const KernelSpec& kernel, double h, double x_obs, double theta_prev,
                 double x_eval) {
  if (!(h > 0.0)) throw ConfigError("nw_weight: bandwidth must be positive");
  return kernel.evaluator((x_obs - theta_prev - x_eval) / h) / h;
}

void nw_update(NWState& state, const KernelSpec& kernel, double x_obs, double y_obs,
               double theta_prev) {
  state.n += 1;
  const double h = std::pow(static_cast<double>(state.n), -state.alpha);
  const double reach = kernel.support_radius * h;
  const double center = x_obs - theta_prev;

  // Nodes receiving mass lie in [center - reach, center + reach] or its
  // mirror image.  The mirrored bounds are exact negations, so the touched
  // index set is itself mirror-symmetric.
  const auto begin = state.grid.begin();
  const auto end = state.grid.end();
  std::size_t lo1 = std::lower_bound(begin, end, center - reach) - begin;
  std::size_t hi1 = std::upper_bound(begin, end, center + reach) - begin;
  std::size_t lo2 = state.grid.size() - hi1;
  std::size_t hi2 = state.grid.size() - lo1;

  if (lo1 > lo2) {
    std::swap(lo1, lo2);
    std::swap(hi1, hi2);
  }
  if (lo2 <= hi1) {  // overlapping windows
    hi1 = std::max(hi1, hi2);
    lo2 = hi2 = hi1;
  }

  auto add = [&](std::size_t j) {
    // Weight at x_j plus the mirrored weight at -x_j in one accumulation.
    // The mirror node sees the same two summands in swapped order, so num
    // and den stay exactly symmetric; each summand rounds exactly like
    // nw_weight, so an offline replay summing nw_weight at x_j and -x_j
    // reproduces the accumulators bit for bit.
    const double w = kernel.evaluator((center - state.grid[j]) / h) / h +
                     kernel.evaluator((center + state.grid[j]) / h) / h;
    state.num[j] += w * y_obs;
    state.den[j] += w;
  };
  for (std::size_t j = lo1; j < hi1; ++j) add(j);
  for (std::size_t j = lo2; j < hi2; ++j) add(j);
}

double nw_evaluate(const NWState& state, int grid_index) {
  if (grid_index < 0 || static_cast<std::size_t>(grid_index) >= state.grid.size())
    throw ConfigError("nw_evaluate: grid index out of range");
  const double den = state.den[static_cast<std::size_t>(grid_index)];
  if (den == 0.0)
    throw UndefinedPointError("nw_evaluate: no kernel mass at the requested grid point yet");
  return state.num[static_cast<std::size_t>(grid_index)] / den;
}

double nw_evaluate_at(const NWState& state, double x) {
  const auto it = std::lower_bound(state.grid.begin(), state.grid.end(), x);
  if (it == state.grid.end() || *it != x)
    throw ConfigError("nw_evaluate_at: x is not a grid point");
  return nw_evaluate(state, static_cast<int>(it - state.grid.begin()));
}

std::vector<ConfidenceInterval> nw_confidence_band(const NWState& state, const ModelSpec& spec,
                                                   const KernelSpec& kernel, double theta_hat,
                                                   double level) {
  if (state.n < 1) throw ConfigError("nw_confidence_band: no observations");
  if (!(level > 0.0 && level < 1.0)) throw ConfigError("nw_confidence_band: level in (0, 1)");
  const double q = normal_quantile(0.5 + 0.5 * level);
  // Effective sample size of the local average: n h_n = n^(1 - alpha).
  const double n_eff = std::pow(static_cast<double>(state.n), 1.0 - state.alpha);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  std::vector<ConfidenceInterval> band(state.grid.size());
  for (std::size_t j = 0; j < state.grid.size(); ++j) {
    ConfidenceInterval ci{nan, nan, level, nan};
    if (state.den[j] > 0.0) {
      const double f_hat = state.num[j] / state.den[j];
      const double v2 =
          nw_asymptotic_variance_at(spec, state.grid[j], state.alpha, kernel.nu2, theta_hat);
      const double half = q * std::sqrt(v2 / n_eff);
      ci = {f_hat - half, f_hat + half, level, v2};
    }
    band[j] = ci;
  }
  return band;
}

}  // namespace shiftrm
