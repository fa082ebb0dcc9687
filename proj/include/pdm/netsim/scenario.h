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

#ifndef PDM_NETSIM_SCENARIO_H_
#define PDM_NETSIM_SCENARIO_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdm/cg/generate.h"
#include "pdm/common/validation.h"
#include "pdm/ops/types.h"
#include "pdm/package/prompt_package.h"

namespace pdm::netsim {

struct Point {
  double x = 0;
  double y = 0;

  bool operator==(const Point&) const = default;
};

struct Circle {
  Point center;
  double radius = 0;

  // Boundary inclusive.
  bool contains(const Point& p) const;

  bool operator==(const Circle&) const = default;
};

struct Broadcaster {
  std::string id;
  Circle coverage;
  package::PromptPackage package;
  // 0 delivers the package as soon as the terminal enters the coverage.
  std::int64_t carousel_period_ms = 0;
  // Audience attribute served by this broadcaster, if any.
  std::optional<std::string> attribute;

  bool operator==(const Broadcaster&) const = default;
};

struct Waypoint {
  std::int64_t time = 0;
  double x = 0;
  double y = 0;

  bool operator==(const Waypoint&) const = default;
};

struct GrtAgent {
  std::string id;
  std::vector<Waypoint> waypoints;
  ops::OperationMode mode = ops::OperationMode::kMultiAsync;
  std::uint64_t seed = 0;
  // Augments every received package with the surroundings of the terminal.
  bool location_hook = false;
  // When non-empty, only broadcasters with one of these attributes are
  // consumed.
  std::vector<std::string> attributes;

  bool operator==(const GrtAgent&) const = default;
};

// Linear interpolation between waypoints; held constant outside them.
Point position_at(const GrtAgent& agent, std::int64_t t);

struct BaselineVideo {
  std::uint64_t bitrate_bps = 10'000'000;
  std::string label = "1280x720 H.265";
  int fps = 24;

  bool operator==(const BaselineVideo&) const = default;
};

struct ModelTransfer {
  std::uint64_t params = 0;
  std::uint64_t bytes_per_param = 2;

  bool operator==(const ModelTransfer&) const = default;
};

enum class ReceptionPolicy { kOncePerDwell, kEveryTick };

std::string_view reception_policy_name(ReceptionPolicy policy);

struct Scenario {
  std::string name;
  std::vector<Broadcaster> broadcasters;
  std::vector<GrtAgent> agents;
  std::int64_t duration_ms = 0;
  BaselineVideo baseline;
  ModelTransfer model_transfer;
  ReceptionPolicy reception = ReceptionPolicy::kOncePerDwell;
  cg::GenerateOptions generate;

  const Broadcaster* find(std::string_view broadcaster_id) const;

  bool operator==(const Scenario&) const = default;
};

ValidationReport validate_scenario(const Scenario& s);

}  // namespace pdm::netsim

#endif  // PDM_NETSIM_SCENARIO_H_
