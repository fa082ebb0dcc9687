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

#ifndef PDM_PACKAGE_PACKAGE_JSON_H_
#define PDM_PACKAGE_PACKAGE_JSON_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pdm/common/bytes.h"
#include "pdm/package/prompt_package.h"

namespace pdm::package {

// Human-authored package description (schema: data/schema/package.schema.json).
//
//   {
//     "package_id": "P1", "provider_id": "acme", "version": 1,
//     "schedule": {"start_ms": 0, "duration_ms": 20000},
//     "elements": [
//       {"id": "g1", "modality": "image", "role": "object", "priority": 0,
//        "mandatory": true, "feature_tag": "G1", "payload": {"filler": 12000}}
//     ]
//   }
//
// A payload object holds exactly one of: "text" (UTF-8 string), "hex",
// "filler" (byte count of deterministic stand-in bytes), "mpeg7" (inline
// document), "mpeg7_file" (path relative to base_dir) or "graph_hex" (SDG1
// bytes). Metadata elements may omit the payload.
//
// Throws Error(kParse) on schema violations.
PromptPackage package_from_json(const nlohmann::json& j,
                                const std::filesystem::path& base_dir = {});
nlohmann::json package_to_json(const PromptPackage& p);

PromptPackage load_package_file(const std::filesystem::path& path);

std::string to_hex(std::span<const std::uint8_t> bytes);
Bytes from_hex(std::string_view hex);

std::string read_file(const std::filesystem::path& path);

}  // namespace pdm::package

#endif  // PDM_PACKAGE_PACKAGE_JSON_H_
