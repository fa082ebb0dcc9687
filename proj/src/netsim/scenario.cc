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

#include "pdm/netsim/scenario.h"

#include <set>

namespace pdm::netsim {

bool Circle::contains(const Point& p) const {
  const double dx = p.x - center.x;
  const double dy = p.y - center.y;
  return dx * dx + dy * dy <= radius * radius;
}

Point position_at(const GrtAgent& agent, std::int64_t t) {
  const auto& w = agent.waypoints;
  if (w.empty()) return {};
  if (t <= w.front().time) return {w.front().x, w.front().y};
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (t <= w[i].time) {
      const double f = static_cast<double>(t - w[i - 1].time) /
                       static_cast<double>(w[i].time - w[i - 1].time);
      return {w[i - 1].x + (w[i].x - w[i - 1].x) * f, w[i - 1].y + (w[i].y - w[i - 1].y) * f};
    }
  }
  return {w.back().x, w.back().y};
}

std::string_view reception_policy_name(ReceptionPolicy policy) {
  return policy == ReceptionPolicy::kOncePerDwell ? "once-per-dwell" : "every-tick";
}

const Broadcaster* Scenario::find(std::string_view broadcaster_id) const {
  for (const auto& b : broadcasters) {
    if (b.id == broadcaster_id) return &b;
  }
  return nullptr;
}

ValidationReport validate_scenario(const Scenario& s) {
  ValidationReport report;
  auto bad = [&](const std::string& subject, const std::string& message) {
    report.add(IssueCode::kInvalidScenario, Severity::kError, subject, message);
  };
  if (s.duration_ms <= 0) bad(s.name, "duration must be positive");
  if (s.baseline.bitrate_bps == 0) bad(s.name, "baseline bitrate must be positive");
  if (s.baseline.fps <= 0) bad(s.name, "baseline fps must be positive");
  if (s.generate.fps <= 0) bad(s.name, "generation fps must be positive");
  if (!(s.generate.density > 0)) bad(s.name, "scene density must be positive");
  if (s.generate.k == 0) bad(s.name, "top-k bound must be positive");
  std::set<std::string> ids;
  std::set<std::string> packages;
  for (const auto& b : s.broadcasters) {
    if (b.id.empty()) bad("broadcaster", "empty id");
    if (!ids.insert(b.id).second) bad(b.id, "duplicate broadcaster id");
    if (!(b.coverage.radius > 0)) bad(b.id, "coverage radius must be positive");
    if (b.carousel_period_ms < 0) bad(b.id, "carousel period must not be negative");
    if (!packages.insert(b.package.package_id).second) {
      bad(b.id, "package " + b.package.package_id + " is carried by two broadcasters");
    }
    report.merge(package::validate_package(b.package));
  }
  std::set<std::string> agents;
  for (const auto& a : s.agents) {
    if (a.id.empty()) bad("agent", "empty id");
    if (!agents.insert(a.id).second) bad(a.id, "duplicate agent id");
    if (a.waypoints.empty()) bad(a.id, "no waypoints");
    for (std::size_t i = 1; i < a.waypoints.size(); ++i) {
      if (a.waypoints[i].time <= a.waypoints[i - 1].time) {
        bad(a.id, "waypoint times must increase strictly");
      }
    }
  }
  return report;
}

}  // namespace pdm::netsim
