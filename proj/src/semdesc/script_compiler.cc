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

#include "pdm/semdesc/script_compiler.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "pdm/common/error.h"

namespace pdm::semdesc {
namespace {

int kind_rank(NodeKind kind) {
  switch (kind) {
    case NodeKind::kEvent: return 0;
    case NodeKind::kAgent: return 1;
    case NodeKind::kObject: return 2;
    case NodeKind::kPlace: return 3;
    case NodeKind::kConcept: return 4;
    case NodeKind::kTime: return 5;
  }
  return 6;
}

std::string subject_phrase(const SemanticNode& n) {
  switch (n.kind) {
    case NodeKind::kEvent: return "The scene shows " + n.label;
    case NodeKind::kAgent: return n.label + " appears";
    case NodeKind::kObject: return n.label + " is featured";
    case NodeKind::kPlace: return "The setting is " + n.label;
    case NodeKind::kConcept: return "The mood conveys " + n.label;
    case NodeKind::kTime: return "The time is " + n.label;
  }
  return n.label;
}

std::string clause(const std::string& relation, const std::string& target) {
  if (relation == "performedBy") return "performed by " + target;
  if (relation == "setting") return "at " + target;
  if (relation == "identity") return "known as " + target;
  if (relation == "hasPerformed") return "having performed " + target;
  return relation_phrase(relation) + " " + target;
}

std::string sentence(std::string text) {
  while (!text.empty() && text.back() == ' ') text.pop_back();
  if (!text.empty() && text.back() != '.' && text.back() != '!' && text.back() != '?') {
    text.push_back('.');
  }
  return text;
}

}  // namespace

std::string relation_phrase(std::string_view relation) {
  std::string out;
  for (char c : relation) {
    if (std::isupper(static_cast<unsigned char>(c))) {
      if (!out.empty()) out.push_back(' ');
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (c == '_' || c == '-') {
      out.push_back(' ');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string humanize_id(std::string_view id) {
  static const std::set<std::string> kMinorWords = {"a",  "an", "and", "at", "by", "for",
                                                    "in", "of", "on",  "or", "the", "to"};
  std::vector<std::string> words(1);
  for (std::size_t i = 0; i < id.size(); ++i) {
    char c = id[i];
    bool boundary = c == '_' || c == ' ' ||
                    (i > 0 && std::isupper(static_cast<unsigned char>(c)) &&
                     !std::isupper(static_cast<unsigned char>(id[i - 1])));
    if (boundary && !words.back().empty()) words.emplace_back();
    if (c != '_' && c != ' ') words.back().push_back(c);
  }
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string word = words[i];
    std::string lower = word;
    for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (i > 0 && kMinorWords.count(lower) != 0) word = lower;
    if (word.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out += word;
  }
  return out;
}

std::string compile_to_script(const SemanticGraph& input) {
  if (input.empty()) throw Error(ErrorCode::kEmptyGraph, "cannot compile an empty graph");
  ValidationReport report = validate_graph(input);
  if (!report.ok()) {
    throw Error(ErrorCode::kValidation, "cannot compile invalid graph:\n" + report.render());
  }
  SemanticGraph g = canonical(input);
  std::vector<const SemanticNode*> order;
  for (const auto& n : g.nodes) order.push_back(&n);
  std::stable_sort(order.begin(), order.end(), [](const SemanticNode* a, const SemanticNode* b) {
    return kind_rank(a->kind) < kind_rank(b->kind);
  });

  auto target_name = [&g](const std::string& id) {
    const SemanticNode* n = g.find(id);
    return n ? n->label : humanize_id(id);
  };

  std::vector<std::string> sentences;
  for (const SemanticNode* n : order) {
    std::string s = subject_phrase(*n);
    for (const auto& r : g.relations) {
      if (r.source == n->id) s += " " + clause(r.relation, target_name(r.target));
    }
    sentences.push_back(sentence(std::move(s)));
    for (const auto& [slot, text] : n->structured_annotation) {
      if (text != n->label) sentences.push_back(sentence(text));
    }
    if (n->free_text) sentences.push_back(*n->free_text);
    for (const auto& m : g.media_occurrences) {
      if (m.node_id == n->id) sentences.push_back("Reference media: " + m.uri + ".");
    }
  }

  std::string script;
  for (const auto& s : sentences) {
    if (!script.empty()) script.push_back(' ');
    script += s;
  }
  return script;
}

}  // namespace pdm::semdesc
