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

#ifndef PDM_NETSIM_COVERAGE_H_
#define PDM_NETSIM_COVERAGE_H_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pdm/netsim/scenario.h"

namespace pdm::netsim {

// Broadcaster ids whose coverage contains p.
std::set<std::string> visible_broadcasters(const Scenario& s, const Point& p);

// Package ids carried by the broadcasters whose coverage contains p.
std::set<std::string> visible_packages(const Scenario& s, const Point& p);

// A continuous stay inside one coverage circle, evaluated at whole
// milliseconds: inside for every t in [entry, exit).
struct Dwell {
  std::string broadcaster_id;
  std::int64_t entry = 0;
  std::int64_t exit = 0;

  bool operator==(const Dwell&) const = default;
};

// Dwells of agent within [0, duration), ordered by (entry, broadcaster id).
// Crossing times come from intersecting each trajectory leg with each
// circle, so the result does not depend on a sampling step.
std::vector<Dwell> coverage_dwells(const Scenario& s, const GrtAgent& agent);

struct VisibilityChange {
  std::int64_t time = 0;
  // Broadcaster ids.
  std::set<std::string> visible;

  bool operator==(const VisibilityChange&) const = default;
};

// The visible set at time 0 followed by every change of it.
std::vector<VisibilityChange> visibility_changes(const Scenario& s, const GrtAgent& agent);

}  // namespace pdm::netsim

#endif  // PDM_NETSIM_COVERAGE_H_
