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

#include "pdm/package/prompt_package.h"

#include <algorithm>
#include <set>

#include "pdm/common/hash.h"

namespace pdm::package {

std::string_view modality_name(Modality m) {
  switch (m) {
    case Modality::kText: return "text";
    case Modality::kImage: return "image";
    case Modality::kLayout: return "layout";
    case Modality::kMetadata: return "metadata";
    case Modality::kApi: return "api";
    case Modality::kEngine: return "engine";
    case Modality::kSemantics: return "semantics";
  }
  return "text";
}

std::optional<Modality> modality_from_name(std::string_view name) {
  for (Modality m : kAllModalities) {
    if (modality_name(m) == name) return m;
  }
  return std::nullopt;
}

bool ServiceElement::payload_empty() const {
  if (const auto* b = bytes()) return b->empty();
  return graph()->empty();
}

const ServiceElement* PromptPackage::find(std::string_view element_id) const {
  for (const auto& e : elements) {
    if (e.element_id == element_id) return &e;
  }
  return nullptr;
}

PromptPackage canonical(PromptPackage p) {
  std::stable_sort(p.elements.begin(), p.elements.end(),
                   [](const ServiceElement& a, const ServiceElement& b) {
                     return a.element_id < b.element_id;
                   });
  for (auto& e : p.elements) {
    if (auto* g = std::get_if<semdesc::SemanticGraph>(&e.payload)) {
      *g = semdesc::canonical(std::move(*g));
    }
  }
  return p;
}

ValidationReport validate_package(const PromptPackage& p) {
  ValidationReport report;
  std::string key = p.provider_id + "/" + p.package_id;
  if (p.package_id.empty()) {
    report.add(IssueCode::kEmptyId, Severity::kError, key, "package_id is empty");
  }
  if (p.elements.empty()) {
    report.add(IssueCode::kNoElements, Severity::kError, key, "package has no service elements");
  }
  if (p.schedule.duration <= 0) {
    report.add(IssueCode::kInvalidSchedule, Severity::kError, key,
               "schedule duration must be positive, got " + std::to_string(p.schedule.duration));
  }
  std::set<std::string_view> ids;
  for (const auto& e : p.elements) {
    if (e.element_id.empty()) {
      report.add(IssueCode::kEmptyElementId, Severity::kError, key, "element id is empty");
    } else if (!ids.insert(e.element_id).second) {
      report.add(IssueCode::kDuplicateElement, Severity::kError, e.element_id,
                 "element id used more than once");
    }
    bool is_graph = e.graph() != nullptr;
    if (is_graph != (e.modality == Modality::kSemantics)) {
      report.add(IssueCode::kPayloadMismatch, Severity::kError, e.element_id,
                 "semantics elements carry a graph, other modalities carry bytes");
    } else if (is_graph) {
      ValidationReport graph = semdesc::validate_graph(*e.graph());
      for (const auto& issue : graph.issues()) {
        report.add(issue.code, issue.severity, e.element_id + ":" + issue.subject, issue.message);
      }
    }
    if (e.modality != Modality::kMetadata && e.payload_empty()) {
      report.add(IssueCode::kEmptyPayload, Severity::kError, e.element_id,
                 "payload is empty for modality " + std::string(modality_name(e.modality)));
    }
  }
  return report;
}

Bytes filler_payload(std::string_view key, std::size_t size) {
  Bytes out(size);
  std::uint64_t state = fnv1a(key);
  for (std::size_t i = 0; i < size; i += 8) {
    std::uint64_t word = mix64(state + i);
    for (std::size_t j = 0; j < 8 && i + j < size; ++j) {
      out[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
    }
  }
  return out;
}

}  // namespace pdm::package
