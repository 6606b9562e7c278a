// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include "shiftrm/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "shiftrm/errors.hpp"

namespace shiftrm {
namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto begin = cell.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
      cells.push_back("");
      continue;
    }
    const auto end = cell.find_last_not_of(" \t\r");
    cells.push_back(cell.substr(begin, end - begin + 1));
  }
  return cells;
}

bool parse_cell(const std::string& cell, double* out) {
  try {
    std::size_t pos = 0;
    *out = std::stod(cell, &pos);
    return pos == cell.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

void load_table(const std::string& path, std::vector<double>* xs, std::vector<double>* vs) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("table: cannot read file '" + path + "'");
  xs->clear();
  vs->clear();
  std::string line;
  bool first = true;
  int row = 0;
  while (std::getline(in, line)) {
    const auto cells = split_row(line);
    if (cells.empty() || (cells.size() == 1 && cells[0].empty())) continue;
    double x = 0.0, v = 0.0;
    const bool ok = cells.size() >= 2 && parse_cell(cells[0], &x) && parse_cell(cells[1], &v);
    if (!ok) {
      if (first) {
        first = false;  // tolerated header row
        continue;
      }
      std::ostringstream msg;
      msg << "table: malformed row " << row + 1 << " in '" << path << "'";
      throw DataError(msg.str());
    }
    first = false;
    xs->push_back(x);
    vs->push_back(v);
    ++row;
  }
  if (xs->empty()) throw ConfigError("table: no rows in '" + path + "'");
}

IngestResult load_observations(const IngestSpec& spec) {
  if (spec.period && spec.x_period)
    throw ConfigError("ingest: period and x_period are mutually exclusive");
  if (spec.period && *spec.period < 2) throw ConfigError("ingest: period must be >= 2");
  if (spec.x_period && !(*spec.x_period > 0.0))
    throw ConfigError("ingest: x_period must be > 0");
  if (spec.x_col < 0 || spec.y_col < 0) throw ConfigError("ingest: column indices must be >= 0");

  std::ifstream in(spec.path, std::ios::binary);
  if (!in) throw DataError("ingest: cannot read file '" + spec.path + "'");

  IngestResult result;
  if (spec.density_file) {
    std::vector<double> xs, vs;
    load_table(*spec.density_file, &xs, &vs);
    result.density = tabulated_density(xs, vs);
  } else {
    result.density = uniform_density();
  }

  const std::size_t need =
      spec.period ? static_cast<std::size_t>(spec.y_col)
                  : static_cast<std::size_t>(std::max(spec.x_col, spec.y_col));
  std::string line;
  bool first = true;
  std::int64_t row = 0;  // 1-based data row index for messages
  while (std::getline(in, line)) {
    const auto cells = split_row(line);
    if (cells.empty() || (cells.size() == 1 && cells[0].empty())) continue;

    double x_raw = 0.0, y = 0.0;
    bool ok = cells.size() > need;
    if (ok && !spec.period) ok = parse_cell(cells[static_cast<std::size_t>(spec.x_col)], &x_raw);
    if (ok) ok = parse_cell(cells[static_cast<std::size_t>(spec.y_col)], &y);
    if (!ok) {
      if (first) {
        first = false;  // tolerated header row
        continue;
      }
      std::ostringstream msg;
      msg << "ingest: malformed row " << row + 1;
      throw DataError(msg.str());
    }
    first = false;
    ++row;

    double x;
    if (spec.period) {
      // Raw-signal mode: the row index walks one period of length P, so
      // x = (i mod P) / P - 1/2 with i counting data rows from zero.
      const std::int64_t i = row - 1;
      x = static_cast<double>(i % *spec.period) / static_cast<double>(*spec.period) - 0.5;
    } else if (spec.x_period) {
      const double z = x_raw / *spec.x_period;
      x = z - std::round(z);
    } else {
      x = x_raw;
    }
    if (!(x >= -0.5 && x <= 0.5)) {
      std::ostringstream msg;
      msg << "ingest: row " << row << " has x = " << x << " outside [-1/2, 1/2]";
      throw DataError(msg.str());
    }
    result.rows.push_back({x, y});
  }
  if (result.rows.empty()) throw ConfigError("ingest: no observations in '" + spec.path + "'");
  return result;
}

}  // namespace shiftrm
