// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "shiftrm/kernel.hpp"
#include "shiftrm/model.hpp"
#include "shiftrm/rm.hpp"

namespace shiftrm {

// Equispaced grid of `points` nodes on [-1/2, 1/2], built so that the
// negation of every node is again a node with the identical bit pattern.
std::vector<double> symmetric_grid(int points);

// Recursive symmetrized kernel-regression accumulators over a fixed grid.
//
// After n observations,
//   num[j] = sum_k (W_k(x_j) + W_k(-x_j)) y_k
//   den[j] = sum_k (W_k(x_j) + W_k(-x_j))
// with W_k(x) = K((X_k - theta_prev_k - x) / h_k) / h_k and h_k = k^-alpha.
// The two kernel terms of one observation are added as a single sum, which
// keeps num and den exactly mirror-symmetric in j.
struct NWState {
  std::vector<double> grid;
  std::vector<double> num;
  std::vector<double> den;
  std::int64_t n = 0;
  double alpha = 0.9;  // bandwidth exponent, 0 < alpha < 1
};

NWState make_nw_state(std::vector<double> grid, double alpha);

// One smoothing weight W(x_eval) = K((x_obs - theta_prev - x_eval) / h) / h.
double nw_weight(const KernelSpec& kernel, double h, double x_obs, double theta_prev,
                 double x_eval);

// Absorbs one observation.  Only grid nodes inside the two kernel windows
// are touched, so a step costs O(window), not O(grid).
void nw_update(NWState& state, const KernelSpec& kernel, double x_obs, double y_obs,
               double theta_prev);

// Curve value num[j] / den[j]; UndefinedPointError while den[j] == 0.
double nw_evaluate(const NWState& state, int grid_index);

// Same, addressed by grid coordinate; x must be (bitwise) a grid node.
double nw_evaluate_at(const NWState& state, double x);

// Pointwise asymptotic confidence band around the estimated curve:
//   f_hat(x_j) -+ q sqrt(v2(x_j) / (n h_n)),  n h_n = n^(1 - alpha),
// with v2 the plug-in curve variance centered at theta_hat.  Points with
// den = 0 are skipped (the returned vector parallels the grid; skipped
// entries carry NaN bounds).
std::vector<ConfidenceInterval> nw_confidence_band(const NWState& state, const ModelSpec& spec,
                                                   const KernelSpec& kernel, double theta_hat,
                                                   double level);

}  // namespace shiftrm
