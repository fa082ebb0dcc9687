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

#include "pdm/semdesc/graph_codec.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pdm/common/error.h"

namespace pdm::semdesc {
namespace {

constexpr std::uint8_t kCustomRelation = 0xff;

class StringTable {
 public:
  explicit StringTable(const std::set<std::string>& strings) {
    std::uint64_t i = 0;
    for (const auto& s : strings) index_.emplace(s, i++);
  }
  std::uint64_t at(const std::string& s) const { return index_.at(s); }
  const std::map<std::string, std::uint64_t>& entries() const { return index_; }

 private:
  std::map<std::string, std::uint64_t> index_;
};

std::uint8_t relation_code(const std::string& name) {
  for (std::size_t i = 0; i < kKnownRelations.size(); ++i) {
    if (kKnownRelations[i] == name) return static_cast<std::uint8_t>(i);
  }
  return kCustomRelation;
}

// Writes a u32 length placeholder, runs body, then patches the length.
template <typename Body>
void section(ByteWriter& w, Body body) {
  std::size_t at = w.size();
  w.u32(0);
  body();
  w.patch_u32(at, static_cast<std::uint32_t>(w.size() - at - 4));
}

}  // namespace

Bytes serialize_graph(const SemanticGraph& input) {
  ValidationReport report = validate_graph(input);
  if (!report.ok()) {
    throw Error(ErrorCode::kValidation, "cannot serialize invalid graph:\n" + report.render());
  }
  SemanticGraph g = canonical(input);

  std::set<std::string> strings;
  for (const auto& n : g.nodes) {
    strings.insert(n.id);
    strings.insert(n.label);
    for (const auto& [k, v] : n.structured_annotation) {
      strings.insert(k);
      strings.insert(v);
    }
    if (n.free_text) strings.insert(*n.free_text);
  }
  for (const auto& m : g.media_occurrences) strings.insert(m.uri);
  for (const auto& r : g.relations) {
    strings.insert(r.source);
    strings.insert(r.target);
    if (relation_code(r.relation) == kCustomRelation) strings.insert(r.relation);
  }
  StringTable table(strings);

  std::map<std::string, std::vector<const std::string*>> media_by_node;
  for (const auto& m : g.media_occurrences) media_by_node[m.node_id].push_back(&m.uri);

  ByteWriter w;
  w.raw(std::string_view(kGraphMagic, 4));
  w.u8(kGraphVersion);
  section(w, [&] {
    w.varint(table.entries().size());
    for (const auto& [s, idx] : table.entries()) {
      w.varint(s.size());
      w.raw(s);
    }
  });
  section(w, [&] {
    w.varint(g.nodes.size());
    for (const auto& n : g.nodes) {
      w.u8(static_cast<std::uint8_t>(n.kind));
      w.varint(table.at(n.id));
      w.varint(table.at(n.label));
      w.varint(n.structured_annotation.size());
      for (const auto& [k, v] : n.structured_annotation) {
        w.varint(table.at(k));
        w.varint(table.at(v));
      }
      w.u8(n.free_text ? 1 : 0);
      if (n.free_text) w.varint(table.at(*n.free_text));
      const auto& uris = media_by_node[n.id];
      w.varint(uris.size());
      for (const auto* uri : uris) w.varint(table.at(*uri));
    }
  });
  section(w, [&] {
    w.varint(g.relations.size());
    for (const auto& r : g.relations) {
      w.varint(table.at(r.source));
      std::uint8_t code = relation_code(r.relation);
      w.u8(code);
      if (code == kCustomRelation) w.varint(table.at(r.relation));
      w.varint(table.at(r.target));
      w.u8(r.dangling ? 1 : 0);
    }
  });
  return w.take();
}

SemanticGraph parse_graph(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes, ByteReader::Failure::kParse);
  if (as_text(r.raw(4)) != std::string_view(kGraphMagic, 4)) {
    throw ParseError("bad magic, expected SDG1", 0);
  }
  if (std::uint8_t version = r.u8(); version != kGraphVersion) {
    throw ParseError("unsupported SDG version " + std::to_string(version), 4);
  }

  // Each section must consume exactly its declared length.
  auto open_section = [&r](const char* name) {
    std::uint32_t len = r.u32();
    if (len > r.remaining()) r.fail(std::string(name) + " section overruns input");
    return r.offset() + len;
  };
  auto close_section = [&r](std::size_t end, const char* name) {
    if (r.offset() != end) r.fail(std::string(name) + " section length mismatch");
  };
  auto count = [&r]() {
    std::uint64_t n = r.varint();
    if (n > r.remaining()) r.fail("element count exceeds input size");
    return static_cast<std::size_t>(n);
  };

  std::vector<std::string> strings;
  std::size_t end = open_section("string");
  strings.resize(count());
  for (std::size_t i = 0; i < strings.size(); ++i) {
    std::uint64_t len = r.varint();
    if (len > r.remaining()) r.fail("string overruns input");
    strings[i] = r.string(static_cast<std::size_t>(len));
    if (i > 0 && !(strings[i - 1] < strings[i])) r.fail("string table not sorted/unique");
  }
  close_section(end, "string");

  auto str = [&]() -> const std::string& {
    std::uint64_t idx = r.varint();
    if (idx >= strings.size()) r.fail("string index out of range");
    return strings[static_cast<std::size_t>(idx)];
  };

  SemanticGraph g;
  end = open_section("node");
  std::size_t nodes = count();
  for (std::size_t i = 0; i < nodes; ++i) {
    SemanticNode n;
    std::uint8_t kind = r.u8();
    if (kind >= kAllNodeKinds.size()) r.fail("unknown node kind");
    n.kind = static_cast<NodeKind>(kind);
    n.id = str();
    n.label = str();
    std::size_t slots = count();
    for (std::size_t s = 0; s < slots; ++s) {
      std::string key = str();
      n.structured_annotation[key] = str();
    }
    std::uint8_t has_free = r.u8();
    if (has_free > 1) r.fail("bad free-text flag");
    if (has_free) n.free_text = str();
    std::size_t media = count();
    for (std::size_t m = 0; m < media; ++m) g.media_occurrences.push_back({n.id, str()});
    g.nodes.push_back(std::move(n));
  }
  close_section(end, "node");

  end = open_section("relation");
  std::size_t relations = count();
  for (std::size_t i = 0; i < relations; ++i) {
    SemanticRelation rel;
    rel.source = str();
    std::uint8_t code = r.u8();
    if (code < kKnownRelations.size()) {
      rel.relation = std::string(kKnownRelations[code]);
    } else if (code == kCustomRelation) {
      rel.relation = str();
    } else {
      r.fail("unknown relation code");
    }
    rel.target = str();
    std::uint8_t flags = r.u8();
    if (flags > 1) r.fail("bad relation flags");
    rel.dangling = flags == 1;
    g.relations.push_back(std::move(rel));
  }
  close_section(end, "relation");
  if (!r.at_end()) r.fail("trailing bytes after relation section");
  return canonical(std::move(g));
}

std::size_t graph_wire_size(const SemanticGraph& g) { return serialize_graph(g).size(); }

}  // namespace pdm::semdesc
