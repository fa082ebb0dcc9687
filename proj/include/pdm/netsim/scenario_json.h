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

#ifndef PDM_NETSIM_SCENARIO_JSON_H_
#define PDM_NETSIM_SCENARIO_JSON_H_

#include <filesystem>

#include "json.hpp"
#include "pdm/netsim/scenario.h"

namespace pdm::netsim {

// Scenario file (schema: data/schema/scenario.schema.json). Broadcaster
// packages are given inline under "package" or by path under
// "package_file", relative to base_dir.
//
// Throws Error(kParse) on schema violations.
Scenario scenario_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
nlohmann::json scenario_to_json(const Scenario& s);

Scenario load_scenario_file(const std::filesystem::path& path);

}  // namespace pdm::netsim

#endif  // PDM_NETSIM_SCENARIO_JSON_H_
