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

#ifndef PDM_OPS_MERGE_H_
#define PDM_OPS_MERGE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pdm/ops/types.h"
#include "pdm/package/prompt_package.h"

namespace pdm::ops {

struct MergePolicy {
  std::size_t k = 8;
  std::optional<std::string> main_override;
};

// Reduces each package to its top-k elements, keeps one element per
// exclusive role (lowest priority, then provider, package and element id)
// and orders the result main first, then subs by (start, provider, package).
// The output does not depend on the order of the inputs.
//
// Throws Error(kEmptyInput), Error(kDuplicatePackage), Error(kValidation)
// for an invalid package and Error(kUnknownMain) when the override is not
// among the inputs.
MergedPackage merge_m1(const std::vector<package::PromptPackage>& packages,
                       const MergePolicy& policy = {});

// Orders packages by (schedule start, provider id, package id).
bool schedule_precedes(const package::PromptPackage& a, const package::PromptPackage& b);

}  // namespace pdm::ops

#endif  // PDM_OPS_MERGE_H_
