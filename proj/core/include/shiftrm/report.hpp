// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>

#include "shiftrm/rm.hpp"
#include "shiftrm/scenario.hpp"
#include "shiftrm/sim.hpp"

namespace shiftrm {

// JSON snapshot of the estimator state.  Doubles survive the round trip
// bit-exactly (shortest-round-trip serialization).
std::string rm_state_to_json_string(const RMState& state);
RMState rm_state_from_json_string(const std::string& text);

// Full run report with the resolved scenario echoed under "scenario".
std::string report_to_json_string(const RunReport& report, const ScenarioConfig& config);

// Same, for runs that were not driven by a ScenarioConfig (data ingestion);
// the echo is a flat string map.
std::string report_to_json_string(const RunReport& report,
                                  const std::map<std::string, std::string>& echo);

// Sidecar CSV writers.  Numbers are printed with enough digits to
// round-trip; reruns yield byte-identical files.
void write_trace_csv(const std::string& path, const std::string& value_column,
                     const std::vector<TracePoint>& trace);
void write_curve_csv(const std::string& path, const std::vector<CurvePoint>& curve);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace shiftrm
