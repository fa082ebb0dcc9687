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

#ifndef PDM_SEMDESC_GRAPH_CODEC_H_
#define PDM_SEMDESC_GRAPH_CODEC_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "pdm/common/bytes.h"
#include "pdm/semdesc/semantic_graph.h"

namespace pdm::semdesc {

inline constexpr char kGraphMagic[4] = {'S', 'D', 'G', '1'};
inline constexpr std::uint8_t kGraphVersion = 1;

// Canonical compact form:
//
//   "SDG1" version:u8
//   strings:   len:u32 | count:varint { size:varint bytes }*      sorted, unique
//   nodes:     len:u32 | count:varint { kind:u8 id label
//                                       nslots { key value }*
//                                       has_free:u8 [free]
//                                       nmedia { uri }* }*           by id
//   relations: len:u32 | count:varint { source code:u8 [name] target flags:u8 }*
//
// Every string reference is a varint index into the string table. Known
// relation names use codes 0..3; code 0xff is followed by a string index.
// Throws Error(kValidation) when the graph has error-level issues.
Bytes serialize_graph(const SemanticGraph& g);

// Inverse of serialize_graph. Returns the graph in canonical order. Throws
// ParseError with the failing byte offset on malformed input.
SemanticGraph parse_graph(std::span<const std::uint8_t> bytes);

std::size_t graph_wire_size(const SemanticGraph& g);

}  // namespace pdm::semdesc

#endif  // PDM_SEMDESC_GRAPH_CODEC_H_
