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

#ifndef PDM_OPS_TIMELINE_H_
#define PDM_OPS_TIMELINE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "pdm/cg/content.h"
#include "pdm/ops/types.h"
#include "pdm/package/prompt_package.h"

namespace pdm::ops {

inline constexpr std::int64_t kForever = INT64_MAX;

// Splits the union of the schedules (clipped to window) at every schedule
// start and end. Stretches where no package is active are left out. The main
// of a segment is the active package with the earliest start, ties broken by
// provider and package id.
//
// Throws Error(kDuplicatePackage) when two packages share an id.
Timeline plan_timeline(const std::vector<package::PromptPackage>& packages,
                       const Interval& window = {INT64_MIN, kForever});

// Sets fade_out of each segment to the features that are not present in the
// adjacent following segment.
void assign_fade_out(std::vector<TimeSegment>& segments);

// Plans the continuation of active content from now on (default: the start
// of the first arrival, or the content start without arrivals). Arrivals must
// be sorted by schedule start.
//
// Throws Error(kStaleArrival) when an arrival ends at or before now and
// Error(kInvalidArgument) for unsorted arrivals.
Timeline plan_timeline_m2(const cg::GeneratedContent& active,
                          const std::vector<package::PromptPackage>& arrivals,
                          std::optional<std::int64_t> now = std::nullopt);

}  // namespace pdm::ops

#endif  // PDM_OPS_TIMELINE_H_
