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


#ifndef PDM_TESTS_SUPPORT_FIXTURES_H_
#define PDM_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <string>

#include "pdm/package/prompt_package.h"

namespace pdm::testing {

inline package::ServiceElement element(std::string id, std::string role, std::string tag,
                                       bool mandatory, std::uint32_t priority) {
  package::ServiceElement e;
  e.element_id = std::move(id);
  e.modality = package::Modality::kImage;
  e.role = std::move(role);
  e.feature_tag = std::move(tag);
  e.mandatory = mandatory;
  e.priority = priority;
  e.payload = to_bytes("pixels of " + e.element_id);
  return e;
}

// Package with one mandatory object element whose feature tag is tag.
inline package::PromptPackage ad_package(std::string id, std::int64_t start,
                                         std::int64_t duration, std::string tag,
                                         std::string provider = "provider") {
  package::PromptPackage p;
  p.package_id = std::move(id);
  p.provider_id = std::move(provider);
  p.schedule = {start, duration};
  p.elements.push_back(element(p.package_id + "-product", "object", std::move(tag), true, 0));
  return p;
}

}  // namespace pdm::testing

#endif  // PDM_TESTS_SUPPORT_FIXTURES_H_
