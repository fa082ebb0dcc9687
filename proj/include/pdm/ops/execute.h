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

#ifndef PDM_OPS_EXECUTE_H_
#define PDM_OPS_EXECUTE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pdm/cg/content.h"
#include "pdm/cg/generate.h"
#include "pdm/ops/types.h"
#include "pdm/package/prompt_package.h"

namespace pdm::ops {

struct Event {
  std::int64_t time = 0;
  std::vector<package::PromptPackage> arrivals;
  // Package ids whose schedules end at this event.
  std::vector<std::string> departures;

  bool operator==(const Event&) const = default;
};

// Single source: exactly one arriving package. Synchronous: all arrivals in
// one event, merged into one segment. Asynchronous: on every event the
// content is cut at the event time, the remaining timeline is planned again
// and the tail is regenerated from the residual of the active packages
// merged with the arrivals.
//
// Throws Error(kModeMismatch) when the events do not fit the mode and
// Error(kInvalidArgument) when events are not time ordered.
cg::GeneratedContent execute(const std::vector<Event>& events, OperationMode mode,
                             std::uint64_t seed, const cg::GenerateOptions& options = {});

// Drops everything presented at or after t and shortens the scene playing
// at t. Books and frames are cleared.
void cut_content(cg::GeneratedContent& c, std::int64_t t);

}  // namespace pdm::ops

#endif  // PDM_OPS_EXECUTE_H_
