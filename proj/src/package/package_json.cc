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

#include "pdm/package/package_json.h"

#include <fstream>
#include <sstream>

#include "pdm/common/error.h"
#include "pdm/semdesc/graph_codec.h"
#include "pdm/semdesc/mpeg7_import.h"

namespace pdm::package {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& message) {
  throw Error(ErrorCode::kParse, "package JSON: " + message);
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) schema_error(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    schema_error(std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
T field_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? field<T>(j, key) : fallback;
}

bool printable_text(const Bytes& b) {
  for (std::uint8_t c : b) {
    if (c < 0x20 && c != '\n' && c != '\t') return false;
    if (c == 0x7f) return false;
  }
  // Require valid UTF-8 so the JSON writer does not throw.
  std::size_t i = 0;
  while (i < b.size()) {
    std::uint8_t c = b[i];
    std::size_t n = 0;
    if (c >= 0x80) {
      if ((c >> 5) == 0x6) {
        n = 1;
      } else if ((c >> 4) == 0xe) {
        n = 2;
      } else if ((c >> 3) == 0x1e) {
        n = 3;
      } else {
        return false;
      }
    }
    if (i + n >= b.size()) return false;
    for (std::size_t k = 1; k <= n; ++k) {
      if ((b[i + k] >> 6) != 0x2) return false;
    }
    i += n + 1;
  }
  return true;
}

Payload payload_from_json(const json& j, Modality modality, const std::string& element_id,
                          const std::filesystem::path& base_dir) {
  if (!j.is_object() || j.size() != 1) {
    schema_error("element '" + element_id + "': payload must hold exactly one key");
  }
  const auto& [key, value] = *j.items().begin();
  auto graph_payload = [&](semdesc::SemanticGraph g) -> Payload {
    if (modality != Modality::kSemantics) {
      schema_error("element '" + element_id + "': graph payload requires modality semantics");
    }
    return g;
  };
  if (key == "mpeg7") return graph_payload(semdesc::import_mpeg7(value.get<std::string>()));
  if (key == "mpeg7_file") {
    return graph_payload(semdesc::import_mpeg7(read_file(base_dir / value.get<std::string>())));
  }
  if (key == "graph_hex") return graph_payload(semdesc::parse_graph(from_hex(value.get<std::string>())));
  if (modality == Modality::kSemantics) {
    schema_error("element '" + element_id + "': semantics payload needs mpeg7, mpeg7_file or graph_hex");
  }
  if (key == "text") return to_bytes(value.get<std::string>());
  if (key == "hex") return from_hex(value.get<std::string>());
  if (key == "filler") return filler_payload(element_id, value.get<std::size_t>());
  schema_error("element '" + element_id + "': unknown payload kind '" + key + "'");
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) schema_error("hex payload has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    schema_error(std::string("bad hex digit '") + c + "'");
  };
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) * 16 + nibble(hex[2 * i + 1]));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PromptPackage package_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) schema_error("top level must be an object");
  PromptPackage p;
  p.package_id = field<std::string>(j, "package_id");
  p.provider_id = field_or<std::string>(j, "provider_id", "");
  p.version = field_or<std::uint32_t>(j, "version", 1);
  const json& schedule = j.contains("schedule") ? j.at("schedule") : json::object();
  p.schedule.start = field_or<std::int64_t>(schedule, "start_ms", 0);
  p.schedule.duration = field<std::int64_t>(schedule, "duration_ms");
  if (!j.contains("elements") || !j.at("elements").is_array()) {
    schema_error("'elements' must be an array");
  }
  for (const auto& je : j.at("elements")) {
    ServiceElement e;
    e.element_id = field<std::string>(je, "id");
    auto modality = modality_from_name(field<std::string>(je, "modality"));
    if (!modality) schema_error("element '" + e.element_id + "': unknown modality");
    e.modality = *modality;
    e.role = field_or<std::string>(je, "role", "");
    e.priority = field_or<std::uint32_t>(je, "priority", 0);
    e.mandatory = field_or<bool>(je, "mandatory", false);
    e.feature_tag = field_or<std::string>(je, "feature_tag", "");
    if (je.contains("payload")) {
      try {
        e.payload = payload_from_json(je.at("payload"), e.modality, e.element_id, base_dir);
      } catch (const json::exception& err) {
        schema_error("element '" + e.element_id + "': " + err.what());
      }
    } else if (e.modality == Modality::kSemantics) {
      e.payload = semdesc::SemanticGraph{};
    }
    p.elements.push_back(std::move(e));
  }
  return p;
}

json package_to_json(const PromptPackage& p) {
  json elements = json::array();
  for (const auto& e : p.elements) {
    json je = {{"id", e.element_id},
               {"modality", modality_name(e.modality)},
               {"role", e.role},
               {"priority", e.priority},
               {"mandatory", e.mandatory},
               {"feature_tag", e.feature_tag}};
    if (const auto* g = e.graph()) {
      je["payload"] = {{"graph_hex", to_hex(semdesc::serialize_graph(*g))}};
    } else if (const Bytes& b = *e.bytes(); !b.empty()) {
      if (b == filler_payload(e.element_id, b.size())) {
        je["payload"] = {{"filler", b.size()}};
      } else if (printable_text(b)) {
        je["payload"] = {{"text", std::string(as_text(b))}};
      } else {
        je["payload"] = {{"hex", to_hex(b)}};
      }
    }
    elements.push_back(std::move(je));
  }
  return {{"package_id", p.package_id},
          {"provider_id", p.provider_id},
          {"version", p.version},
          {"schedule", {{"start_ms", p.schedule.start}, {"duration_ms", p.schedule.duration}}},
          {"elements", std::move(elements)}};
}

PromptPackage load_package_file(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
  return package_from_json(j, path.parent_path());
}

}  // namespace pdm::package
