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

#ifndef PDM_OPS_AUGMENTATION_H_
#define PDM_OPS_AUGMENTATION_H_

#include <optional>
#include <string>
#include <vector>

#include "pdm/common/validation.h"
#include "pdm/package/prompt_package.h"

namespace pdm::ops {

enum class DirectiveKind { kInsert, kRemove, kReplace };

struct Directive {
  DirectiveKind kind = DirectiveKind::kInsert;
  // kInsert
  package::ServiceElement element;
  // kRemove: elements matching role or feature_tag (whichever is set).
  std::string role;
  std::string feature_tag;
  // kReplace: feature_tag from -> to, optionally swapping the payload.
  std::string from_tag;
  std::string to_tag;
  std::optional<package::Payload> replacement_payload;
};

struct AugmentationProfile {
  std::vector<Directive> directives;
};

struct AugmentationResult {
  package::PromptPackage package;
  std::vector<std::string> log;
};

// Applies the directives in order. Removing a mandatory element is refused
// and logged. Inserting a background or style element displaces optional
// elements of that role.
//
// Throws Error(kUnknownFeature) when a replace names a missing feature tag
// and Error(kValidation) when the result is not a valid package.
AugmentationResult apply_augmentation(const package::PromptPackage& p,
                                      const AugmentationProfile& profile);

// Stand-in for a positioning service: names the street view around (x, y).
std::string mock_location_tag(double x, double y);

// Inserts a background element showing the surroundings of (x, y).
AugmentationProfile location_hook_profile(double x, double y);

}  // namespace pdm::ops

#endif  // PDM_OPS_AUGMENTATION_H_
