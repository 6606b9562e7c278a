// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "shiftrm/scenario.hpp"

namespace shiftrm {

// Parses the flat key = value scenario format ('#' comments, blank lines
// ignored).  Unknown keys and unparsable values raise ConfigError naming
// the offending field; the returned scenario has passed validate_scenario.
ScenarioConfig parse_scenario_string(const std::string& text);
ScenarioConfig parse_scenario_file(const std::string& path);

}  // namespace shiftrm
