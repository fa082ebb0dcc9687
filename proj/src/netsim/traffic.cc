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

#include "pdm/netsim/traffic.h"

namespace pdm::netsim {

TrafficReport traffic_for(std::uint64_t prompt_bytes, std::int64_t runtime_ms,
                          const BaselineVideo& baseline, const ModelTransfer& model) {
  TrafficReport r;
  r.prompt_bytes = prompt_bytes;
  r.runtime_ms = runtime_ms;
  r.degenerate = runtime_ms <= 0;
  if (runtime_ms > 0) {
    const auto bits = static_cast<unsigned __int128>(baseline.bitrate_bps) *
                      static_cast<std::uint64_t>(runtime_ms);
    r.baseline_equivalent_bytes = static_cast<std::uint64_t>(bits / 8000);
  }
  r.model_transfer_bytes = model.params * model.bytes_per_param;
  if (r.baseline_equivalent_bytes > 0) {
    r.prompt_to_baseline_ratio = static_cast<double>(prompt_bytes) /
                                 static_cast<double>(r.baseline_equivalent_bytes);
    if (r.baseline_equivalent_bytes > prompt_bytes) {
      r.break_even_programs = static_cast<double>(r.model_transfer_bytes) /
                              static_cast<double>(r.baseline_equivalent_bytes - prompt_bytes);
    }
  }
  return r;
}

TrafficReport traffic_report(const SimulationTrace& trace, const Scenario& s) {
  std::uint64_t prompt = 0;
  std::int64_t runtime = 0;
  for (const auto& agent : trace.agents) {
    if (!agent.receptions.empty()) prompt += agent.receptions.back().cumulative_prompt_bytes;
    if (agent.content) runtime += agent.content->runtime_length();
  }
  return traffic_for(prompt, runtime, s.baseline, s.model_transfer);
}

}  // namespace pdm::netsim
