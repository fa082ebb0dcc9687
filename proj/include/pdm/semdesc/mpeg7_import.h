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

#ifndef PDM_SEMDESC_MPEG7_IMPORT_H_
#define PDM_SEMDESC_MPEG7_IMPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include "pdm/semdesc/semantic_graph.h"

namespace pdm::semdesc {

struct ImportResult {
  SemanticGraph graph;
  // Elements outside the supported subset that were skipped.
  std::vector<std::string> warnings;
};

// Imports the MPEG-7 Semantic Description subset: SemanticBase, Label,
// Definition, StructuredAnnotation, FreeTextAnnotation, Relation,
// MediaOccurrence/MediaLocator/MediaUri. Container elements (Mpeg7,
// Description, DescriptionUnit, Semantic) are descended silently; anything
// else is skipped with a warning.
//
// Throws ParseError for malformed documents and Error(kUnsupportedKind) for a
// SemanticBase whose xsi:type is not one of the six node kinds.
ImportResult import_mpeg7_detailed(std::string_view document);

inline SemanticGraph import_mpeg7(std::string_view document) {
  return import_mpeg7_detailed(document).graph;
}

}  // namespace pdm::semdesc

#endif  // PDM_SEMDESC_MPEG7_IMPORT_H_
