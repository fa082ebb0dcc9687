// Copyright 2026 The PDM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PDM_CLI_TRACE_JSON_H_
#define PDM_CLI_TRACE_JSON_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "pdm/cg/content.h"
#include "pdm/netsim/scenario.h"
#include "pdm/netsim/simulator.h"
#include "pdm/netsim/traffic.h"
#include "pdm/ops/types.h"

namespace pdm::cli {

nlohmann::json merged_to_json(const ops::MergedPackage& m);
nlohmann::json segment_to_json(const ops::TimeSegment& s);

// Narrative flags, scene samples, storyboards, continuity entries, snapshot
// intervals and per-frame visible objects.
nlohmann::json content_to_json(const cg::GeneratedContent& c);

nlohmann::json traffic_to_json(const netsim::TrafficReport& r);

// Full simulation trace plus the inputs needed to recompute the traffic
// report from it.
nlohmann::json simulation_to_json(const netsim::SimulationTrace& trace, const netsim::Scenario& s);

// Recomputes the traffic report from a simulation trace document.
//
// Throws Error(kParse) when the document lacks the traffic inputs.
netsim::TrafficReport traffic_from_trace(const nlohmann::json& trace);

std::string render_timeline(const cg::GeneratedContent& c);
std::string render_phase_table(const std::vector<netsim::Phase>& phases);
std::string render_traffic(const netsim::TrafficReport& r);
std::string render_content_summary(const cg::GeneratedContent& c);

std::string join(const std::set<std::string>& items, const char* separator = ",");

}  // namespace pdm::cli

#endif  // PDM_CLI_TRACE_JSON_H_
