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

#ifndef PDM_PACKAGE_PROMPT_PACKAGE_H_
#define PDM_PACKAGE_PROMPT_PACKAGE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pdm/common/bytes.h"
#include "pdm/common/validation.h"
#include "pdm/semdesc/semantic_graph.h"

namespace pdm::package {

enum class Modality : std::uint8_t {
  kText,
  kImage,
  kLayout,
  kMetadata,
  kApi,
  kEngine,
  kSemantics,
};

inline constexpr std::array<Modality, 7> kAllModalities = {
    Modality::kText, Modality::kImage,  Modality::kLayout,   Modality::kMetadata,
    Modality::kApi,  Modality::kEngine, Modality::kSemantics};

std::string_view modality_name(Modality m);
std::optional<Modality> modality_from_name(std::string_view name);

// Common slot tags. Roles are open strings; these are the ones the content
// generator interprets.
inline constexpr std::string_view kRoleObject = "object";
inline constexpr std::string_view kRoleBackground = "background";
inline constexpr std::string_view kRoleStyle = "style";
inline constexpr std::string_view kRoleNarrativeHint = "narrative-hint";

using Payload = std::variant<Bytes, semdesc::SemanticGraph>;

struct ServiceElement {
  std::string element_id;
  Modality modality = Modality::kText;
  std::string role;
  // 0 is the highest priority.
  std::uint32_t priority = 0;
  bool mandatory = false;
  // SemanticGraph iff modality == kSemantics.
  Payload payload;
  std::string feature_tag;

  const Bytes* bytes() const { return std::get_if<Bytes>(&payload); }
  const semdesc::SemanticGraph* graph() const {
    return std::get_if<semdesc::SemanticGraph>(&payload);
  }
  bool payload_empty() const;

  bool operator==(const ServiceElement&) const = default;
};

// Milliseconds since the scenario epoch.
struct Schedule {
  std::int64_t start = 0;
  std::int64_t duration = 0;

  std::int64_t end() const { return start + duration; }
  bool contains(std::int64_t t) const { return t >= start && t < end(); }

  bool operator==(const Schedule&) const = default;
};

struct PromptPackage {
  std::string package_id;
  std::string provider_id;
  std::vector<ServiceElement> elements;
  Schedule schedule;
  std::uint32_t version = 1;

  const ServiceElement* find(std::string_view element_id) const;

  bool operator==(const PromptPackage&) const = default;
};

// Elements sorted by element_id; embedded graphs canonicalized.
PromptPackage canonical(PromptPackage p);

ValidationReport validate_package(const PromptPackage& p);

// Deterministic stand-in bytes for bulky payloads (product shots, layouts).
Bytes filler_payload(std::string_view key, std::size_t size);

}  // namespace pdm::package

#endif  // PDM_PACKAGE_PROMPT_PACKAGE_H_
