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

#include "pdm/cli/targeted_ad.h"

#include <vector>

#include "pdm/common/error.h"

namespace pdm::cli {

ops::MergedPackage targeted_ad_assemble(
    const std::set<std::string>& attributes,
    const std::map<std::string, package::PromptPackage>& packages_by_attribute,
    const ops::MergePolicy& policy) {
  if (attributes.empty()) throw Error(ErrorCode::kEmptySelection, "no user attributes given");
  std::vector<package::PromptPackage> selected;
  for (const auto& attribute : attributes) {
    auto it = packages_by_attribute.find(attribute);
    if (it == packages_by_attribute.end()) {
      throw Error(ErrorCode::kUnknownAttribute, "no package prepared for attribute " + attribute);
    }
    selected.push_back(it->second);
  }
  return ops::merge_m1(selected, policy);
}

std::set<std::string> feature_set(const ops::MergedPackage& m) {
  std::set<std::string> tags;
  for (const auto& e : m.elements) {
    if (!e.element.feature_tag.empty()) tags.insert(e.element.feature_tag);
  }
  return tags;
}

}  // namespace pdm::cli
