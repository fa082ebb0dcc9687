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

#include "pdm/package/top_k.h"

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "pdm/common/error.h"

namespace pdm::package {

TopKResult select_top_k(const PromptPackage& p, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "top-k bound must be at least 1");
  std::size_t mandatory = std::count_if(p.elements.begin(), p.elements.end(),
                                        [](const ServiceElement& e) { return e.mandatory; });
  std::vector<const ServiceElement*> optional;
  for (const auto& e : p.elements) {
    if (!e.mandatory) optional.push_back(&e);
  }
  std::sort(optional.begin(), optional.end(), [](const ServiceElement* a, const ServiceElement* b) {
    return std::tie(a->priority, a->element_id) < std::tie(b->priority, b->element_id);
  });
  std::size_t room = k > mandatory ? k - mandatory : 0;
  std::set<const ServiceElement*> keep(optional.begin(),
                                       optional.begin() + std::min(room, optional.size()));

  TopKResult result;
  result.mandatory_overflow = mandatory > k;
  result.package = p;
  result.package.elements.clear();
  for (const auto& e : p.elements) {
    if (e.mandatory || keep.contains(&e)) result.package.elements.push_back(e);
  }
  return result;
}

}  // namespace pdm::package
