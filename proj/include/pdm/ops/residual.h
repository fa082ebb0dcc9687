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

#ifndef PDM_OPS_RESIDUAL_H_
#define PDM_OPS_RESIDUAL_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pdm/cg/content.h"
#include "pdm/ops/types.h"
#include "pdm/package/prompt_package.h"

namespace pdm::ops {

struct ResidualPackage {
  // Main package of the scene playing at the cut.
  std::string origin_package_id;
  std::int64_t cut_time = 0;
  std::vector<cg::SceneSample> remaining_scene_samples;
  std::vector<cg::NarrativeFlag> remaining_flags;
  std::vector<MergedElement> remaining_elements;

  bool operator==(const ResidualPackage&) const = default;
};

// Keeps every scene sample whose presentation interval ends after t_cut, so
// the scene playing at the cut is included.
//
// Throws Error(kNothingRemaining) when t_cut >= the content runtime end.
ResidualPackage residual(const cg::GeneratedContent& c, std::int64_t t_cut);

// One synthetic package per origin whose schedule runs past the cut: the
// remaining elements of that origin plus its mandatory elements, scheduled
// over [cut, original end).
std::vector<package::PromptPackage> residual_packages(const ResidualPackage& r,
                                                      const cg::GeneratedContent& c);

}  // namespace pdm::ops

#endif  // PDM_OPS_RESIDUAL_H_
