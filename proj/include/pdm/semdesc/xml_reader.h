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

#ifndef PDM_SEMDESC_XML_READER_H_
#define PDM_SEMDESC_XML_READER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pdm::semdesc {

// A small element tree. Text directly under an element is concatenated into
// `text`; comments, processing instructions and the doctype are dropped.
struct XmlElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<XmlElement> children;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;

  std::optional<std::string_view> attribute(std::string_view key) const;
  const XmlElement* child(std::string_view child_name) const;
};

// Parses a complete document with exactly one root element. Throws
// ParseError carrying line/column/offset on malformed input.
XmlElement parse_xml(std::string_view document);

// Collapses whitespace runs to one space and trims both ends.
std::string normalize_space(std::string_view text);

}  // namespace pdm::semdesc

#endif  // PDM_SEMDESC_XML_READER_H_
