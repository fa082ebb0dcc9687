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

#include "pdm/semdesc/mpeg7_import.h"

#include <optional>
#include <utility>

#include "pdm/common/error.h"
#include "pdm/semdesc/xml_reader.h"

namespace pdm::semdesc {
namespace {

std::string_view local_name(std::string_view qualified) {
  auto colon = qualified.rfind(':');
  return colon == std::string_view::npos ? qualified : qualified.substr(colon + 1);
}

std::string strip_fragment(std::string_view ref) {
  std::string id = normalize_space(ref);
  if (!id.empty() && id.front() == '#') id.erase(0, 1);
  return id;
}

std::optional<NodeKind> kind_for_type(std::string_view type) {
  type = local_name(type);
  if (type == "AgentObjectType") return NodeKind::kAgent;
  if (type == "EventObjectType" || type == "EventType") return NodeKind::kEvent;
  if (type == "PlaceObjectType" || type == "SemanticPlaceType") return NodeKind::kPlace;
  if (type == "ObjectType") return NodeKind::kObject;
  if (type == "ConceptType" || type == "ConceptObjectType") return NodeKind::kConcept;
  if (type == "SemanticTimeType" || type == "TimeObjectType") return NodeKind::kTime;
  return std::nullopt;
}

bool is_container(std::string_view name) {
  return name == "Mpeg7" || name == "Description" || name == "DescriptionUnit" ||
         name == "Semantic";
}

class Importer {
 public:
  ImportResult run(const XmlElement& root) {
    visit(root);
    mark_dangling(result_.graph);
    return std::move(result_);
  }

 private:
  void warn(const XmlElement& el, const std::string& what) {
    result_.warnings.push_back("line " + std::to_string(el.line) + ": skipped <" + el.name +
                               ">" + (what.empty() ? "" : " (" + what + ")"));
  }

  void visit(const XmlElement& el) {
    auto name = local_name(el.name);
    if (name == "SemanticBase") {
      semantic_base(el);
    } else if (is_container(name)) {
      for (const auto& c : el.children) visit(c);
    } else {
      warn(el, "outside the supported subset");
    }
  }

  void semantic_base(const XmlElement& el) {
    auto type = el.attribute("xsi:type");
    if (!type) {
      throw Error(ErrorCode::kUnsupportedKind,
                  "SemanticBase at line " + std::to_string(el.line) + " has no xsi:type");
    }
    auto kind = kind_for_type(*type);
    if (!kind) {
      throw Error(ErrorCode::kUnsupportedKind,
                  "unsupported SemanticBase type '" + std::string(*type) + "' at line " +
                      std::to_string(el.line));
    }
    SemanticNode node;
    node.kind = *kind;
    node.id = std::string(el.attribute("id").value_or(""));
    for (const auto& c : el.children) {
      auto name = local_name(c.name);
      if (name == "Label") {
        const XmlElement* n = c.child("Name");
        node.label = normalize_space(n ? n->text : c.text);
      } else if (name == "Definition") {
        definition(c, node);
      } else if (name == "FreeTextAnnotation") {
        append_free_text(node, c.text);
      } else if (name == "StructuredAnnotation") {
        structured(c, node);
      } else if (name == "Relation") {
        relation(c, node.id);
      } else if (name == "MediaOccurrence") {
        media(c, node.id);
      } else {
        warn(c, "inside SemanticBase '" + node.id + "'");
      }
    }
    if (node.label.empty()) node.label = node.id;
    result_.graph.nodes.push_back(std::move(node));
  }

  void definition(const XmlElement& el, SemanticNode& node) {
    for (const auto& c : el.children) {
      auto name = local_name(c.name);
      if (name == "StructuredAnnotation") {
        structured(c, node);
      } else if (name == "FreeTextAnnotation") {
        append_free_text(node, c.text);
      } else {
        warn(c, "inside Definition");
      }
    }
  }

  static void append_free_text(SemanticNode& node, std::string_view raw) {
    std::string text = normalize_space(raw);
    if (text.empty()) return;
    node.free_text = node.free_text ? *node.free_text + " " + text : text;
  }

  static void put_slot(SemanticNode& node, const std::string& key, std::string value) {
    if (value.empty()) return;
    auto [it, inserted] = node.structured_annotation.emplace(key, value);
    if (!inserted) it->second += "; " + value;
  }

  // <Who><Name>Yim</Name><Background>..</Background></Who> yields
  // Who -> Yim and Background -> ...; a slot with plain text maps directly.
  static void structured(const XmlElement& el, SemanticNode& node) {
    for (const auto& slot : el.children) {
      std::string slot_name(local_name(slot.name));
      if (slot.children.empty()) {
        put_slot(node, slot_name, normalize_space(slot.text));
        continue;
      }
      for (const auto& field : slot.children) {
        std::string field_name(local_name(field.name));
        put_slot(node, field_name == "Name" ? slot_name : field_name,
                 normalize_space(field.text));
      }
    }
  }

  void relation(const XmlElement& el, const std::string& owner) {
    SemanticRelation r;
    r.relation = std::string(el.attribute("type").value_or(""));
    auto source = el.attribute("source");
    r.source = source ? strip_fragment(*source) : owner;
    r.target = strip_fragment(el.attribute("target").value_or(""));
    result_.graph.relations.push_back(std::move(r));
  }

  void media(const XmlElement& el, const std::string& owner) {
    for (const auto& c : el.children) {
      auto name = local_name(c.name);
      if (name == "MediaUri") {
        result_.graph.media_occurrences.push_back({owner, normalize_space(c.text)});
      } else if (name == "MediaLocator") {
        media(c, owner);
      } else {
        warn(c, "inside MediaOccurrence");
      }
    }
  }

  ImportResult result_;
};

}  // namespace

ImportResult import_mpeg7_detailed(std::string_view document) {
  XmlElement root = parse_xml(document);
  return Importer().run(root);
}

}  // namespace pdm::semdesc
