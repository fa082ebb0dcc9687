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

#include "pdm/netsim/coverage.h"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace pdm::netsim {

namespace {

// Whole-millisecond times around every point where the trajectory may cross
// the circle boundary.
std::set<std::int64_t> candidate_times(const Circle& c, const GrtAgent& agent,
                                       std::int64_t duration) {
  std::set<std::int64_t> out;
  auto add = [&](double t) {
    const auto base = static_cast<std::int64_t>(std::floor(t));
    for (std::int64_t n = base - 1; n <= base + 2; ++n) {
      if (n > 0 && n < duration) out.insert(n);
    }
  };
  const auto& w = agent.waypoints;
  for (const auto& p : w) add(static_cast<double>(p.time));
  for (std::size_t i = 1; i < w.size(); ++i) {
    const double dx = w[i].x - w[i - 1].x;
    const double dy = w[i].y - w[i - 1].y;
    const double ox = w[i - 1].x - c.center.x;
    const double oy = w[i - 1].y - c.center.y;
    const double a = dx * dx + dy * dy;
    if (a == 0) continue;
    const double b = 2 * (ox * dx + oy * dy);
    const double cc = ox * ox + oy * oy - c.radius * c.radius;
    const double disc = b * b - 4 * a * cc;
    if (disc < 0) continue;
    const double span = static_cast<double>(w[i].time - w[i - 1].time);
    for (double sign : {-1.0, 1.0}) {
      const double u = (-b + sign * std::sqrt(disc)) / (2 * a);
      if (u >= -1e-9 && u <= 1 + 1e-9) add(static_cast<double>(w[i - 1].time) + u * span);
    }
  }
  return out;
}

}  // namespace

std::set<std::string> visible_broadcasters(const Scenario& s, const Point& p) {
  std::set<std::string> out;
  for (const auto& b : s.broadcasters) {
    if (b.coverage.contains(p)) out.insert(b.id);
  }
  return out;
}

std::set<std::string> visible_packages(const Scenario& s, const Point& p) {
  std::set<std::string> out;
  for (const auto& b : s.broadcasters) {
    if (b.coverage.contains(p)) out.insert(b.package.package_id);
  }
  return out;
}

std::vector<Dwell> coverage_dwells(const Scenario& s, const GrtAgent& agent) {
  std::vector<Dwell> dwells;
  for (const auto& b : s.broadcasters) {
    auto inside = [&](std::int64_t t) { return b.coverage.contains(position_at(agent, t)); };
    constexpr std::int64_t kOutside = -1;
    std::int64_t entered = inside(0) ? 0 : kOutside;
    for (std::int64_t t : candidate_times(b.coverage, agent, s.duration_ms)) {
      const bool now = inside(t);
      if (now == inside(t - 1)) continue;
      if (now) {
        entered = t;
      } else if (entered != kOutside) {
        dwells.push_back({b.id, entered, t});
        entered = kOutside;
      }
    }
    if (entered != kOutside) dwells.push_back({b.id, entered, s.duration_ms});
  }
  std::sort(dwells.begin(), dwells.end(), [](const Dwell& x, const Dwell& y) {
    return std::tie(x.entry, x.broadcaster_id) < std::tie(y.entry, y.broadcaster_id);
  });
  return dwells;
}

std::vector<VisibilityChange> visibility_changes(const Scenario& s, const GrtAgent& agent) {
  std::set<std::int64_t> times = {0};
  for (const auto& d : coverage_dwells(s, agent)) {
    times.insert(d.entry);
    if (d.exit < s.duration_ms) times.insert(d.exit);
  }
  std::vector<VisibilityChange> out;
  for (std::int64_t t : times) {
    auto visible = visible_broadcasters(s, position_at(agent, t));
    if (out.empty() || out.back().visible != visible) out.push_back({t, std::move(visible)});
  }
  return out;
}

}  // namespace pdm::netsim
