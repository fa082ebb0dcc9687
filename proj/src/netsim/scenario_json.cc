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

#include "pdm/netsim/scenario_json.h"

#include "pdm/common/error.h"
#include "pdm/package/package_json.h"

namespace pdm::netsim {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& message) {
  throw Error(ErrorCode::kParse, "scenario JSON: " + message);
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    schema_error(std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
T field_or(const json& j, const char* key, T fallback) {
  return j.is_object() && j.contains(key) ? field<T>(j, key) : fallback;
}

const json& array_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    schema_error(std::string("'") + key + "' must be an array");
  }
  return j.at(key);
}

}  // namespace

Scenario scenario_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) schema_error("top level must be an object");
  Scenario s;
  s.name = field_or<std::string>(j, "name", "");
  s.duration_ms = field<std::int64_t>(j, "duration_ms");
  if (j.contains("baseline")) {
    const json& b = j.at("baseline");
    s.baseline.bitrate_bps = field<std::uint64_t>(b, "bitrate_bps");
    s.baseline.fps = field_or<int>(b, "fps", s.baseline.fps);
    s.baseline.label = field_or<std::string>(b, "label", s.baseline.label);
  }
  if (j.contains("model_transfer")) {
    const json& m = j.at("model_transfer");
    s.model_transfer.params = field<std::uint64_t>(m, "params");
    s.model_transfer.bytes_per_param = field_or<std::uint64_t>(m, "bytes_per_param", 2);
  }
  const std::string reception = field_or<std::string>(j, "reception", "once-per-dwell");
  if (reception == "once-per-dwell") {
    s.reception = ReceptionPolicy::kOncePerDwell;
  } else if (reception == "every-tick") {
    s.reception = ReceptionPolicy::kEveryTick;
  } else {
    schema_error("unknown reception policy '" + reception + "'");
  }
  if (j.contains("generation")) {
    const json& g = j.at("generation");
    s.generate.density = field_or<double>(g, "density", s.generate.density);
    s.generate.fps = field_or<int>(g, "fps", s.generate.fps);
    s.generate.k = field_or<std::size_t>(g, "k", s.generate.k);
  }

  for (const auto& jb : array_field(j, "broadcasters")) {
    Broadcaster b;
    b.id = field<std::string>(jb, "id");
    auto center = field<std::vector<double>>(jb, "center");
    if (center.size() != 2) schema_error("broadcaster '" + b.id + "': center needs two coordinates");
    b.coverage = {{center[0], center[1]}, field<double>(jb, "radius")};
    b.carousel_period_ms = field_or<std::int64_t>(jb, "carousel_period_ms", 0);
    if (jb.contains("attribute")) b.attribute = field<std::string>(jb, "attribute");
    if (jb.contains("package")) {
      b.package = package::package_from_json(jb.at("package"), base_dir);
    } else if (jb.contains("package_file")) {
      b.package = package::load_package_file(base_dir / field<std::string>(jb, "package_file"));
    } else {
      schema_error("broadcaster '" + b.id + "' needs 'package' or 'package_file'");
    }
    s.broadcasters.push_back(std::move(b));
  }

  const json seeds = j.contains("seeds") ? j.at("seeds") : json::object();
  for (const auto& ja : array_field(j, "agents")) {
    GrtAgent a;
    a.id = field<std::string>(ja, "id");
    for (const auto& jw : array_field(ja, "waypoints")) {
      a.waypoints.push_back({field<std::int64_t>(jw, "t_ms"), field<double>(jw, "x"), field<double>(jw, "y")});
    }
    const std::string mode = field_or<std::string>(ja, "mode", "async");
    auto parsed = ops::operation_mode_from_name(mode);
    if (!parsed) schema_error("agent '" + a.id + "': unknown mode '" + mode + "'");
    a.mode = *parsed;
    a.seed = field_or<std::uint64_t>(seeds, a.id.c_str(), 0);
    a.location_hook = field_or<bool>(ja, "location_hook", false);
    a.attributes = field_or<std::vector<std::string>>(ja, "attributes", {});
    s.agents.push_back(std::move(a));
  }
  return s;
}

json scenario_to_json(const Scenario& s) {
  json broadcasters = json::array();
  for (const auto& b : s.broadcasters) {
    json jb = {{"id", b.id},
               {"center", {b.coverage.center.x, b.coverage.center.y}},
               {"radius", b.coverage.radius},
               {"carousel_period_ms", b.carousel_period_ms}};
    if (b.attribute) jb["attribute"] = *b.attribute;
    jb["package"] = package::package_to_json(b.package);
    broadcasters.push_back(std::move(jb));
  }
  json agents = json::array();
  json seeds = json::object();
  for (const auto& a : s.agents) {
    json waypoints = json::array();
    for (const auto& w : a.waypoints) waypoints.push_back({{"t_ms", w.time}, {"x", w.x}, {"y", w.y}});
    json ja = {{"id", a.id},
               {"waypoints", std::move(waypoints)},
               {"mode", ops::operation_mode_name(a.mode)}};
    if (a.location_hook) ja["location_hook"] = true;
    if (!a.attributes.empty()) ja["attributes"] = a.attributes;
    agents.push_back(std::move(ja));
    seeds[a.id] = a.seed;
  }
  return {{"name", s.name},
          {"duration_ms", s.duration_ms},
          {"baseline",
           {{"bitrate_bps", s.baseline.bitrate_bps}, {"fps", s.baseline.fps}, {"label", s.baseline.label}}},
          {"model_transfer",
           {{"params", s.model_transfer.params}, {"bytes_per_param", s.model_transfer.bytes_per_param}}},
          {"reception", reception_policy_name(s.reception)},
          {"generation", {{"density", s.generate.density}, {"fps", s.generate.fps}, {"k", s.generate.k}}},
          {"seeds", std::move(seeds)},
          {"broadcasters", std::move(broadcasters)},
          {"agents", std::move(agents)}};
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(package::read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
  return scenario_from_json(j, path.parent_path());
}

}  // namespace pdm::netsim
