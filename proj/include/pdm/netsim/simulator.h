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

#ifndef PDM_NETSIM_SIMULATOR_H_
#define PDM_NETSIM_SIMULATOR_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pdm/cg/content.h"
#include "pdm/netsim/coverage.h"
#include "pdm/netsim/scenario.h"
#include "pdm/ops/execute.h"
#include "pdm/ops/types.h"

namespace pdm::netsim {

struct ReceptionEvent {
  std::int64_t time = 0;
  std::string broadcaster_id;
  std::string package_id;
  std::uint64_t wire_bytes = 0;
  // Running total of prompt bytes received by this agent.
  std::uint64_t cumulative_prompt_bytes = 0;
  // False for carousel repeats that only count as traffic.
  bool fed = true;

  bool operator==(const ReceptionEvent&) const = default;
};

// One row of the phase table: a stretch with a constant visible set and a
// single content timeline segment (or none).
struct Phase {
  ops::Interval interval;
  std::set<std::string> visible;
  // Main package of the segment playing; empty when nothing plays.
  std::string main_id;
  // Features shown by the frames of the phase.
  std::set<std::string> features;

  bool operator==(const Phase&) const = default;
};

struct AgentTrace {
  std::string agent_id;
  std::uint64_t seed = 0;
  ops::OperationMode mode = ops::OperationMode::kMultiAsync;
  std::vector<VisibilityChange> transitions;
  std::vector<ReceptionEvent> receptions;
  std::vector<ops::Event> events;
  std::optional<cg::GeneratedContent> content;
  std::vector<Phase> phases;

  bool operator==(const AgentTrace&) const = default;
};

struct SimulationTrace {
  std::string scenario;
  std::vector<AgentTrace> agents;

  bool operator==(const SimulationTrace&) const = default;
};

// Runs every agent through the scenario: coverage dwells, carousel
// receptions, arrivals and departures fed to the content generator, and the
// resulting phase table.
//
// Throws Error(kValidation) before any event runs when the scenario is
// invalid.
SimulationTrace run_scenario(const Scenario& s);

}  // namespace pdm::netsim

#endif  // PDM_NETSIM_SIMULATOR_H_
