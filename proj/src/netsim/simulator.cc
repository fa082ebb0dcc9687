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

#include "pdm/netsim/simulator.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "pdm/common/error.h"
#include "pdm/ops/augmentation.h"
#include "pdm/package/package_codec.h"

namespace pdm::netsim {

namespace {

bool accepts(const GrtAgent& agent, const Broadcaster& b) {
  if (agent.attributes.empty()) return true;
  return b.attribute && std::find(agent.attributes.begin(), agent.attributes.end(), *b.attribute) !=
                            agent.attributes.end();
}

std::int64_t first_tick(std::int64_t entry, std::int64_t period) {
  if (period == 0) return entry;
  return (entry + period - 1) / period * period;
}

// Rows split wherever the visible set or the content timeline changes.
std::vector<Phase> phase_table(const Scenario& s, const GrtAgent& agent, const AgentTrace& trace) {
  std::set<std::int64_t> cuts;
  for (const auto& change : trace.transitions) cuts.insert(change.time);
  if (trace.content) {
    for (const auto& seg : trace.content->segments) {
      cuts.insert(seg.timeline.interval.start);
      cuts.insert(seg.timeline.interval.end);
    }
  }
  std::erase_if(cuts, [&](std::int64_t t) { return t < 0 || t >= s.duration_ms; });
  std::vector<Phase> phases;
  for (auto it = cuts.begin(); it != cuts.end(); ++it) {
    Phase phase;
    phase.interval = {*it, std::next(it) == cuts.end() ? s.duration_ms : *std::next(it)};
    phase.visible = visible_broadcasters(s, position_at(agent, phase.interval.start));
    if (trace.content) {
      for (const auto& seg : trace.content->segments) {
        if (seg.timeline.interval.contains(phase.interval.start)) phase.main_id = seg.timeline.main_id;
      }
      phase.features = cg::features_in(*trace.content, phase.interval);
    }
    phases.push_back(std::move(phase));
  }
  return phases;
}

AgentTrace run_agent(const Scenario& s, const GrtAgent& agent) {
  AgentTrace trace;
  trace.agent_id = agent.id;
  trace.seed = agent.seed;
  trace.transitions = visibility_changes(s, agent);

  std::map<std::int64_t, ops::Event> events;
  for (const auto& dwell : coverage_dwells(s, agent)) {
    const Broadcaster& b = *s.find(dwell.broadcaster_id);
    if (!accepts(agent, b)) continue;
    const std::int64_t tick = first_tick(dwell.entry, b.carousel_period_ms);
    if (tick >= dwell.exit) continue;

    package::PromptPackage p = b.package;
    if (agent.location_hook) {
      const Point at = position_at(agent, tick);
      p = ops::apply_augmentation(p, ops::location_hook_profile(at.x, at.y)).package;
    }
    const std::uint64_t wire = package::package_wire_size(p);
    for (std::int64_t t = tick; t < dwell.exit; t += b.carousel_period_ms) {
      trace.receptions.push_back({t, b.id, p.package_id, wire, 0, t == tick});
      if (s.reception == ReceptionPolicy::kOncePerDwell || b.carousel_period_ms == 0) break;
    }

    const std::int64_t start = std::max(p.schedule.start, tick);
    const std::int64_t end = std::min(p.schedule.end(), s.duration_ms);
    if (end <= start) continue;
    p.schedule = {start, end - start};
    auto& arrival = events[tick];
    arrival.time = tick;
    arrival.arrivals.push_back(std::move(p));
    if (dwell.exit < end) {
      auto& departure = events[dwell.exit];
      departure.time = dwell.exit;
      departure.departures.push_back(b.package.package_id);
    }
  }

  std::sort(trace.receptions.begin(), trace.receptions.end(), [](const auto& a, const auto& b) {
    return std::tie(a.time, a.broadcaster_id) < std::tie(b.time, b.broadcaster_id);
  });
  std::uint64_t total = 0;
  for (auto& r : trace.receptions) {
    total += r.wire_bytes;
    r.cumulative_prompt_bytes = total;
  }

  std::size_t arrivals = 0;
  bool departures = false;
  for (auto& [time, event] : events) {
    std::sort(event.arrivals.begin(), event.arrivals.end(),
              [](const auto& a, const auto& b) { return a.package_id < b.package_id; });
    std::sort(event.departures.begin(), event.departures.end());
    arrivals += event.arrivals.size();
    departures = departures || !event.departures.empty();
    trace.events.push_back(event);
  }
  trace.mode = arrivals == 1 && !departures ? ops::OperationMode::kSingleSource : agent.mode;
  if (arrivals > 0) trace.content = ops::execute(trace.events, trace.mode, agent.seed, s.generate);
  trace.phases = phase_table(s, agent, trace);
  return trace;
}

}  // namespace

SimulationTrace run_scenario(const Scenario& s) {
  auto report = validate_scenario(s);
  if (!report.ok()) {
    throw Error(ErrorCode::kValidation, "scenario " + s.name + ":\n" + report.render());
  }
  SimulationTrace trace;
  trace.scenario = s.name;
  for (const auto& agent : s.agents) trace.agents.push_back(run_agent(s, agent));
  return trace;
}

}  // namespace pdm::netsim
