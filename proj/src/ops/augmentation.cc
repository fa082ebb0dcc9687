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

#include "pdm/ops/augmentation.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "pdm/common/error.h"
#include "pdm/ops/types.h"

namespace pdm::ops {

namespace {

void insert(package::PromptPackage& p, const package::ServiceElement& element,
            std::vector<std::string>& log) {
  if (is_exclusive_role(element.role)) {
    std::erase_if(p.elements, [&](const package::ServiceElement& e) {
      if (e.role != element.role || e.mandatory) return false;
      log.push_back("displaced " + e.element_id + " (" + e.role + ")");
      return true;
    });
  }
  p.elements.push_back(element);
  log.push_back("inserted " + element.element_id);
}

void remove(package::PromptPackage& p, const Directive& d, std::vector<std::string>& log) {
  std::erase_if(p.elements, [&](const package::ServiceElement& e) {
    bool match = (!d.role.empty() && e.role == d.role) ||
                 (!d.feature_tag.empty() && e.feature_tag == d.feature_tag);
    if (!match) return false;
    if (e.mandatory) {
      log.push_back("refused removal of mandatory element " + e.element_id);
      return false;
    }
    log.push_back("removed " + e.element_id);
    return true;
  });
}

void replace(package::PromptPackage& p, const Directive& d, std::vector<std::string>& log) {
  bool found = false;
  for (auto& e : p.elements) {
    if (e.feature_tag != d.from_tag) continue;
    found = true;
    e.feature_tag = d.to_tag;
    if (d.replacement_payload) e.payload = *d.replacement_payload;
    log.push_back("replaced " + d.from_tag + " with " + d.to_tag + " in " + e.element_id);
  }
  if (!found) {
    throw Error(ErrorCode::kUnknownFeature, "no element carries feature " + d.from_tag);
  }
}

std::string coordinate(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(std::llround(v)));
  return buf;
}

}  // namespace

AugmentationResult apply_augmentation(const package::PromptPackage& p,
                                      const AugmentationProfile& profile) {
  AugmentationResult result{p, {}};
  for (const auto& d : profile.directives) {
    switch (d.kind) {
      case DirectiveKind::kInsert: insert(result.package, d.element, result.log); break;
      case DirectiveKind::kRemove: remove(result.package, d, result.log); break;
      case DirectiveKind::kReplace: replace(result.package, d, result.log); break;
    }
  }
  auto report = package::validate_package(result.package);
  if (!report.ok()) {
    throw Error(ErrorCode::kValidation, "augmented package " + p.package_id + ":\n" + report.render());
  }
  return result;
}

std::string mock_location_tag(double x, double y) {
  return "street-view:loc(" + coordinate(x) + "," + coordinate(y) + ")";
}

AugmentationProfile location_hook_profile(double x, double y) {
  Directive d;
  d.kind = DirectiveKind::kInsert;
  d.element.element_id = "location-backdrop";
  d.element.modality = package::Modality::kImage;
  d.element.role = std::string(package::kRoleBackground);
  d.element.priority = 0;
  d.element.feature_tag = mock_location_tag(x, y);
  d.element.payload = to_bytes("street view around " + coordinate(x) + "," + coordinate(y));
  return {{d}};
}

}  // namespace pdm::ops
