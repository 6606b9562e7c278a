// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftrm/density.hpp"
#include "shiftrm/sim.hpp"

namespace shiftrm {

// How to turn a CSV file into an observation stream.
//
// Column mode (default): x_col and y_col select the columns.  Raw-signal
// mode (period set): the file carries only a signal column y_col and row
// index i maps to x = (i mod period) / period - 1/2.  x_period instead
// wraps raw x values t to t/x_period mod 1, centered on 0.  Without either,
// x values must already lie in [-1/2, 1/2].
struct IngestSpec {
  std::string path;
  int x_col = 0;
  int y_col = 1;
  std::optional<std::int64_t> period;
  std::optional<double> x_period;
  std::optional<std::string> density_file;  // tabulated design density; default uniform
};

struct IngestResult {
  std::vector<Observation> rows;
  Density density;
};

// Reads and validates the stream.  A leading header row is skipped when the
// needed cells are not numeric.  Malformed rows and out-of-range x raise
// DataError naming the 1-based data row; an empty stream raises ConfigError.
IngestResult load_observations(const IngestSpec& spec);

// Loads a two-column (x, value) CSV table, e.g. for tabulated shapes and
// densities.
void load_table(const std::string& path, std::vector<double>* xs, std::vector<double>* vs);

}  // namespace shiftrm
