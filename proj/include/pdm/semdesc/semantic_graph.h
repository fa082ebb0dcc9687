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

#ifndef PDM_SEMDESC_SEMANTIC_GRAPH_H_
#define PDM_SEMDESC_SEMANTIC_GRAPH_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdm/common/validation.h"

namespace pdm::semdesc {

enum class NodeKind : std::uint8_t { kAgent, kEvent, kPlace, kObject, kConcept, kTime };

inline constexpr std::array<NodeKind, 6> kAllNodeKinds = {
    NodeKind::kAgent, NodeKind::kEvent,   NodeKind::kPlace,
    NodeKind::kObject, NodeKind::kConcept, NodeKind::kTime};

std::string_view node_kind_name(NodeKind kind);

struct SemanticNode {
  std::string id;
  NodeKind kind = NodeKind::kObject;
  std::string label;
  // Slot -> text, e.g. "Who" -> "Yim", "Background" -> "...".
  std::map<std::string, std::string> structured_annotation;
  std::optional<std::string> free_text;

  bool operator==(const SemanticNode&) const = default;
};

struct SemanticRelation {
  std::string source;
  std::string target;
  std::string relation;
  // Set when target does not name a node of the same graph.
  bool dangling = false;

  bool operator==(const SemanticRelation&) const = default;
};

struct MediaOccurrence {
  std::string node_id;
  std::string uri;

  bool operator==(const MediaOccurrence&) const = default;
};

// Order-sensitive value type; compare canonical() forms for structural
// equality.
struct SemanticGraph {
  std::vector<SemanticNode> nodes;
  std::vector<SemanticRelation> relations;
  std::vector<MediaOccurrence> media_occurrences;

  bool empty() const { return nodes.empty(); }
  const SemanticNode* find(std::string_view id) const;

  bool operator==(const SemanticGraph&) const = default;
};

// Relations with fixed script templates; anything else is accepted with a
// warning.
inline constexpr std::array<std::string_view, 4> kKnownRelations = {
    "performedBy", "setting", "identity", "hasPerformed"};

bool is_known_relation(std::string_view relation);

// Nodes by id, relations by (source, relation, target), media by
// (node, uri). Dangling flags are recomputed against the node set.
SemanticGraph canonical(SemanticGraph g);

// Recomputes every relation's dangling flag.
void mark_dangling(SemanticGraph& g);

ValidationReport validate_graph(const SemanticGraph& g);

}  // namespace pdm::semdesc

#endif  // PDM_SEMDESC_SEMANTIC_GRAPH_H_
