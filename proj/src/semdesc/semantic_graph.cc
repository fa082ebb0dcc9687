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

#include "pdm/semdesc/semantic_graph.h"

#include <algorithm>
#include <set>
#include <tuple>

namespace pdm::semdesc {

std::string_view node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::kAgent: return "Agent";
    case NodeKind::kEvent: return "Event";
    case NodeKind::kPlace: return "Place";
    case NodeKind::kObject: return "Object";
    case NodeKind::kConcept: return "Concept";
    case NodeKind::kTime: return "Time";
  }
  return "Object";
}

const SemanticNode* SemanticGraph::find(std::string_view id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

bool is_known_relation(std::string_view relation) {
  return std::find(kKnownRelations.begin(), kKnownRelations.end(), relation) !=
         kKnownRelations.end();
}

void mark_dangling(SemanticGraph& g) {
  std::set<std::string_view> ids;
  for (const auto& n : g.nodes) ids.insert(n.id);
  for (auto& r : g.relations) r.dangling = !ids.contains(r.target);
}

SemanticGraph canonical(SemanticGraph g) {
  std::stable_sort(g.nodes.begin(), g.nodes.end(),
                   [](const SemanticNode& a, const SemanticNode& b) { return a.id < b.id; });
  std::sort(g.relations.begin(), g.relations.end(),
            [](const SemanticRelation& a, const SemanticRelation& b) {
              return std::tie(a.source, a.relation, a.target) <
                     std::tie(b.source, b.relation, b.target);
            });
  std::sort(g.media_occurrences.begin(), g.media_occurrences.end(),
            [](const MediaOccurrence& a, const MediaOccurrence& b) {
              return std::tie(a.node_id, a.uri) < std::tie(b.node_id, b.uri);
            });
  mark_dangling(g);
  return g;
}

ValidationReport validate_graph(const SemanticGraph& g) {
  ValidationReport report;
  std::set<std::string_view> ids;
  for (const auto& n : g.nodes) {
    if (n.id.empty()) {
      report.add(IssueCode::kEmptyId, Severity::kError, n.label, "node id is empty");
      continue;
    }
    if (!ids.insert(n.id).second) {
      report.add(IssueCode::kDuplicateId, Severity::kError, n.id, "node id declared more than once");
    }
  }
  for (const auto& r : g.relations) {
    std::string subject = r.source + " " + r.relation + " " + r.target;
    if (!ids.contains(r.source)) {
      report.add(IssueCode::kUnknownSource, Severity::kError, subject,
                 "relation source '" + r.source + "' is not a node");
    }
    if (!ids.contains(r.target)) {
      report.add(IssueCode::kDanglingTarget, Severity::kWarning, subject,
                 "relation target '" + r.target + "' is not declared in this graph");
    }
    if (!is_known_relation(r.relation)) {
      report.add(IssueCode::kUnknownRelation, Severity::kWarning, subject,
                 "relation '" + r.relation + "' has no dedicated template");
    }
  }
  for (const auto& m : g.media_occurrences) {
    if (!ids.contains(m.node_id)) {
      report.add(IssueCode::kUnknownSource, Severity::kError, m.uri,
                 "media occurrence names unknown node '" + m.node_id + "'");
    }
  }
  return report;
}

}  // namespace pdm::semdesc
