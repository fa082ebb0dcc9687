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

#ifndef PDM_CG_GENERATE_H_
#define PDM_CG_GENERATE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pdm/cg/content.h"
#include "pdm/ops/types.h"
#include "pdm/package/prompt_package.h"

namespace pdm::cg {

inline constexpr std::size_t kDefaultTopK = 8;

struct GenerateOptions {
  double density = 1.0;
  int fps = kDefaultFps;
  std::size_t k = kDefaultTopK;

  bool operator==(const GenerateOptions&) const = default;
};

// Runs the pipeline for one segment over segment.interval and appends the
// result to c. With bridge set and earlier content ending at the segment
// start, the first storyboard continues the previous one. Books and frames
// are left for finalize_content.
void append_segment(GeneratedContent& c, const ops::MergedPackage& m,
                    const ops::TimeSegment& segment, const GenerateOptions& options,
                    bool bridge);

// Rebuilds continuity books and frame sequences for the whole content.
void finalize_content(GeneratedContent& c);

// Single source and synchronous modes run one segment over the hull of the
// schedules; the asynchronous mode treats each package as arriving at its
// schedule start.
GeneratedContent generate_content(const std::vector<package::PromptPackage>& packages,
                                  ops::OperationMode mode, std::uint64_t seed,
                                  const GenerateOptions& options = {});

}  // namespace pdm::cg

#endif  // PDM_CG_GENERATE_H_
