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

#ifndef PDM_SEMDESC_SCRIPT_COMPILER_H_
#define PDM_SEMDESC_SCRIPT_COMPILER_H_

#include <string>
#include <string_view>

#include "pdm/semdesc/semantic_graph.h"

namespace pdm::semdesc {

// Renders a graph as a deterministic prompt script. One sentence per node
// (events first, then agents, objects, places, concepts, times; by id within
// a kind), relations realized as clauses on their source node's sentence,
// then annotation text, free text verbatim, and media references.
//
// Throws Error(kEmptyGraph) for a graph without nodes and Error(kValidation)
// when validate_graph reports errors.
std::string compile_to_script(const SemanticGraph& g);

// "locatedNear" -> "located near".
std::string relation_phrase(std::string_view relation);

// "WaltzOfTheFlowers" -> "Waltz Of The Flowers".
std::string humanize_id(std::string_view id);

}  // namespace pdm::semdesc

#endif  // PDM_SEMDESC_SCRIPT_COMPILER_H_
