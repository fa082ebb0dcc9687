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

#ifndef PDM_NETSIM_BUILTIN_SCENARIOS_H_
#define PDM_NETSIM_BUILTIN_SCENARIOS_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pdm/netsim/scenario.h"
#include "pdm/package/prompt_package.h"

namespace pdm::netsim {

// g1g2, coverage-traverse, transit-ads, signage, targeted-ad.
const std::vector<std::string>& builtin_scenario_names();

// Throws Error(kInvalidArgument) for an unknown name.
Scenario builtin_scenario(std::string_view name);

// One advertisement package per audience attribute a..f.
std::map<std::string, package::PromptPackage> targeted_ad_packages();

}  // namespace pdm::netsim

#endif  // PDM_NETSIM_BUILTIN_SCENARIOS_H_
