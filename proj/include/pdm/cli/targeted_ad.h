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

#ifndef PDM_CLI_TARGETED_AD_H_
#define PDM_CLI_TARGETED_AD_H_

#include <map>
#include <set>
#include <string>

#include "pdm/ops/merge.h"
#include "pdm/ops/types.h"
#include "pdm/package/prompt_package.h"

namespace pdm::cli {

// Merges the packages prepared for the user's attributes, and only those.
//
// Throws Error(kEmptySelection) for an empty attribute set and
// Error(kUnknownAttribute) when no package is prepared for an attribute.
ops::MergedPackage targeted_ad_assemble(
    const std::set<std::string>& attributes,
    const std::map<std::string, package::PromptPackage>& packages_by_attribute,
    const ops::MergePolicy& policy = {});

// Non-empty feature tags of the merged elements.
std::set<std::string> feature_set(const ops::MergedPackage& m);

}  // namespace pdm::cli

#endif  // PDM_CLI_TARGETED_AD_H_
