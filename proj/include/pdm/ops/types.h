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

#ifndef PDM_OPS_TYPES_H_
#define PDM_OPS_TYPES_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pdm/package/prompt_package.h"

namespace pdm::ops {

enum class OperationMode { kSingleSource, kMultiSync, kMultiAsync };

std::string_view operation_mode_name(OperationMode mode);
std::optional<OperationMode> operation_mode_from_name(std::string_view name);

struct ElementRef {
  std::string package_id;
  std::string element_id;

  auto operator<=>(const ElementRef&) const = default;
};

struct MergedElement {
  std::string origin_package_id;
  std::string origin_provider_id;
  package::ServiceElement element;

  ElementRef ref() const { return {origin_package_id, element.element_id}; }

  bool operator==(const MergedElement&) const = default;
};

struct Conflict {
  std::string role;
  ElementRef winner;
  std::vector<ElementRef> losers;

  bool operator==(const Conflict&) const = default;
};

struct MergedPackage {
  std::string main_package_id;
  std::vector<std::string> sub_package_ids;
  std::vector<MergedElement> elements;
  std::vector<Conflict> conflict_log;
  // Hull of the input schedules, or the planning window when merged for a
  // timeline segment.
  package::Schedule schedule;

  const MergedElement* find(const ElementRef& ref) const;
  std::vector<std::string> package_ids() const;

  bool operator==(const MergedPackage&) const = default;
};

struct Interval {
  std::int64_t start = 0;
  std::int64_t end = 0;

  std::int64_t length() const { return end - start; }
  bool contains(std::int64_t t) const { return t >= start && t < end; }

  bool operator==(const Interval&) const = default;
};

struct TimeSegment {
  Interval interval;
  std::string main_id;
  std::vector<std::string> sub_ids;
  std::set<std::string> features_present;
  std::set<std::string> fade_out;

  bool operator==(const TimeSegment&) const = default;
};

struct Timeline {
  std::vector<TimeSegment> segments;

  bool operator==(const Timeline&) const = default;
};

bool is_exclusive_role(std::string_view role);

// Feature tags of the mandatory elements of p.
std::set<std::string> mandatory_features(const package::PromptPackage& p);

}  // namespace pdm::ops

#endif  // PDM_OPS_TYPES_H_
