// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

namespace shiftrm {

// Standard normal cumulative distribution function.
double normal_cdf(double x);

// Inverse of normal_cdf, accurate to full double precision (Wichura's
// rational approximations).  Throws ConfigError unless 0 < p < 1.
double normal_quantile(double p);

double mean(std::span<const double> values);

// Unbiased sample variance (n - 1 denominator); requires size >= 2.
double sample_variance(std::span<const double> values);

// Median; averages the middle pair for even sizes.  Copies its input.
double median(std::span<const double> values);

// Kolmogorov-Smirnov distance between the empirical distribution of the
// sample and the standard normal.  Copies and sorts its input.
double ks_distance_to_standard_normal(std::span<const double> sample);

}  // namespace shiftrm
