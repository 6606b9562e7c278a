// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace shiftrm {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration or construction input; nothing was run.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A numeric procedure failed (quadrature did not converge, a user
// evaluator produced a non-finite value, ...).
class NumericError : public Error {
 public:
  using Error::Error;
};

// The observation density fell below its declared lower bound where a
// statistic divides by it.
class DensityError : public Error {
 public:
  using Error::Error;
};

// An operation was called in the wrong model variant (e.g. the symmetric
// closed form on a non-symmetric shape).
class VariantError : public Error {
 public:
  using Error::Error;
};

// Both first Fourier coefficients vanish; the shift is not identifiable.
class IdentifiabilityError : public Error {
 public:
  using Error::Error;
};

// The fast-rate condition on the first Fourier coefficients fails; the
// slow-rate regime is not supported.
class RateRegimeError : public Error {
 public:
  using Error::Error;
};

// A curve estimate was requested at a grid point with no kernel mass.
class UndefinedPointError : public Error {
 public:
  using Error::Error;
};

// Malformed input data encountered mid-stream (bad row, out-of-range x).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace shiftrm
