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

#ifndef PDM_PACKAGE_TOP_K_H_
#define PDM_PACKAGE_TOP_K_H_

#include <cstddef>

#include "pdm/package/prompt_package.h"

namespace pdm::package {

struct TopKResult {
  PromptPackage package;
  // More mandatory elements than k; all of them were kept anyway.
  bool mandatory_overflow = false;
};

// Keeps every mandatory element plus the best non-mandatory elements by
// (priority, element_id) until min(k, size) elements remain. Relative element
// order is preserved, so k >= size is the identity. Throws
// Error(kInvalidArgument) for k == 0.
TopKResult select_top_k(const PromptPackage& p, std::size_t k);

}  // namespace pdm::package

#endif  // PDM_PACKAGE_TOP_K_H_
