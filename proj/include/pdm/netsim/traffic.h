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

#ifndef PDM_NETSIM_TRAFFIC_H_
#define PDM_NETSIM_TRAFFIC_H_

#include <cstdint>
#include <optional>

#include "pdm/netsim/scenario.h"
#include "pdm/netsim/simulator.h"

namespace pdm::netsim {

struct TrafficReport {
  std::uint64_t prompt_bytes = 0;
  std::uint64_t baseline_equivalent_bytes = 0;
  std::uint64_t model_transfer_bytes = 0;
  std::int64_t runtime_ms = 0;
  // prompt_bytes / baseline_equivalent_bytes, 0 without a baseline.
  double prompt_to_baseline_ratio = 0;
  // Programs needed before a model transfer pays off; empty when prompts do
  // not save anything per program.
  std::optional<double> break_even_programs;
  // Set when no content played, so the ratios carry no meaning.
  bool degenerate = false;

  bool operator==(const TrafficReport&) const = default;
};

// baseline = bitrate * runtime / 8, model = params * bytes_per_param.
TrafficReport traffic_for(std::uint64_t prompt_bytes, std::int64_t runtime_ms,
                          const BaselineVideo& baseline, const ModelTransfer& model);

// Sums received prompt bytes and played runtime over all agents.
TrafficReport traffic_report(const SimulationTrace& trace, const Scenario& s);

}  // namespace pdm::netsim

#endif  // PDM_NETSIM_TRAFFIC_H_
