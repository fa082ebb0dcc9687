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

#include "pdm/netsim/builtin_scenarios.h"

#include <cmath>

#include "pdm/common/error.h"

namespace pdm::netsim {

namespace {

using package::Modality;
using package::PromptPackage;
using package::ServiceElement;

constexpr std::size_t kImageBytes = 12000;
constexpr std::uint64_t kBitrate = 10'000'000;
constexpr std::uint64_t kModelParams = 11'600'000'000;

ServiceElement image(const std::string& id, const std::string& tag, bool mandatory,
                     std::uint32_t priority, std::string_view role = package::kRoleObject) {
  ServiceElement e;
  e.element_id = id;
  e.modality = Modality::kImage;
  e.role = std::string(role);
  e.priority = priority;
  e.mandatory = mandatory;
  e.feature_tag = tag;
  e.payload = package::filler_payload(id, kImageBytes);
  return e;
}

ServiceElement text(const std::string& id, std::string_view role, const std::string& body,
                    std::uint32_t priority, const std::string& tag = "") {
  ServiceElement e;
  e.element_id = id;
  e.modality = Modality::kText;
  e.role = std::string(role);
  e.priority = priority;
  e.feature_tag = tag;
  e.payload = to_bytes(body);
  return e;
}

PromptPackage make_package(const std::string& id, const std::string& provider, std::int64_t start,
                           std::int64_t duration, std::vector<ServiceElement> elements) {
  PromptPackage p;
  p.package_id = id;
  p.provider_id = provider;
  p.schedule = {start, duration};
  p.elements = std::move(elements);
  return package::canonical(std::move(p));
}

Broadcaster broadcaster(const std::string& id, double x, double y, double radius,
                        std::int64_t carousel, PromptPackage p) {
  Broadcaster b;
  b.id = id;
  b.coverage = {{x, y}, radius};
  b.carousel_period_ms = carousel;
  b.package = std::move(p);
  return b;
}

Scenario base(const std::string& name, std::int64_t duration) {
  Scenario s;
  s.name = name;
  s.duration_ms = duration;
  s.baseline.bitrate_bps = kBitrate;
  s.model_transfer.params = kModelParams;
  s.model_transfer.bytes_per_param = 2;
  return s;
}

GrtAgent agent(const std::string& id, std::vector<Waypoint> waypoints) {
  GrtAgent a;
  a.id = id;
  a.waypoints = std::move(waypoints);
  return a;
}

// A drink brand and a snack brand whose schedules overlap by one third.
Scenario g1g2() {
  Scenario s = base("g1g2", 30000);
  s.broadcasters.push_back(broadcaster(
      "P1", 0, 0, 1000, 1000,
      make_package("P1", "brand-one", 0, 20000,
                   {image("g1", "G1", true, 0),
                    text("p1-copy", package::kRoleNarrativeHint, "A cold drink on a hot afternoon", 1)})));
  s.broadcasters.push_back(broadcaster(
      "P2", 200, 0, 100, 1000,
      make_package("P2", "brand-two", 10000, 20000,
                   {image("g2", "G2", true, 0),
                    text("p2-copy", package::kRoleNarrativeHint, "A crunchy snack shared by friends", 1)})));
  s.agents.push_back(agent("grt", {{0, 0, 0}, {30000, 300, 0}}));
  return s;
}

// Six overlapping cells crossed by one terminal; the visible set goes
// {A,B,C} -> {C,D} -> {A,E,F}.
Scenario coverage_traverse() {
  Scenario s = base("coverage-traverse", 25000);
  struct Cell {
    const char* id;
    double x, y, radius;
    const char* hint;
  };
  const Cell cells[] = {
      {"A", 0, 0, 100, "a mountain ridge at dawn"},
      {"B", 70, -40, 50, "a marching band"},
      {"C", 110, 20, 50, "a lantern festival"},
      {"D", 150, 50, std::sqrt(5000.0), "a harbour in the rain"},
      {"E", 40, 100, std::sqrt(3200.0), "a street magician"},
      {"F", 80, 120, 60, "a bakery opening its doors"},
  };
  for (const auto& c : cells) {
    std::string id = c.id;
    std::string lower(1, static_cast<char>(id[0] - 'A' + 'a'));
    s.broadcasters.push_back(broadcaster(
        id, c.x, c.y, c.radius, 0,
        make_package(id, "provider-" + lower, 0, 25000,
                     {image(lower + "-feature", id, true, 0),
                      text(lower + "-hint", package::kRoleNarrativeHint, c.hint, 1)})));
  }
  s.agents.push_back(agent("grt", {{0, 70, 0}, {12001, 150, 0}, {22001, 52, 84}}));
  return s;
}

// A bus passing three stops, each with its own advertiser, under a city-wide
// information channel.
Scenario transit_ads() {
  Scenario s = base("transit-ads", 60000);
  s.broadcasters.push_back(broadcaster(
      "city", 1500, 0, 2000, 2000,
      make_package("city-info", "city-transit", 0, 60000,
                   {image("skyline", "city-skyline", false, 3, package::kRoleBackground),
                    text("route", package::kRoleNarrativeHint, "Route 7 towards the harbour", 2)})));
  s.broadcasters.push_back(broadcaster(
      "stop-1", 500, 0, 300, 1000,
      make_package("coffee", "roastery", 0, 60000,
                   {image("cup", "coffee-cup", true, 0), image("barista", "barista", false, 2),
                    text("coffee-style", package::kRoleStyle, "warm morning light", 1)})));
  s.broadcasters.push_back(broadcaster(
      "stop-2", 1500, 0, 300, 1000,
      make_package("sneakers", "runner-co", 0, 60000,
                   {image("shoe", "sneaker", true, 0),
                    image("track", "running-track", false, 1, package::kRoleBackground)})));
  s.broadcasters.push_back(broadcaster(
      "stop-3", 2500, 0, 300, 1000,
      make_package("museum", "city-museum", 0, 60000,
                   {image("statue", "museum-statue", true, 0),
                    text("museum-copy", package::kRoleNarrativeHint, "Late opening on Fridays", 1)})));
  s.agents.push_back(agent("bus", {{0, 0, 0}, {60000, 3000, 0}}));
  return s;
}

// A shop window display that blends the spring sale with the street view
// around the screen.
Scenario signage() {
  Scenario s = base("signage", 20000);
  s.broadcasters.push_back(broadcaster(
      "mall", 0, 0, 50, 0,
      make_package("spring-sale", "department-store", 0, 20000,
                   {image("dress", "spring-dress", true, 0), image("bag", "handbag", false, 1),
                    text("sale-copy", package::kRoleNarrativeHint, "Thirty percent off this week", 2)})));
  GrtAgent screen = agent("screen", {{0, 10, 10}});
  screen.location_hook = true;
  s.agents.push_back(std::move(screen));
  return s;
}

// Six attribute-specific packages on one cell; the viewer matches a, b, d.
Scenario targeted_ad() {
  Scenario s = base("targeted-ad", 15000);
  for (auto& [attribute, p] : targeted_ad_packages()) {
    Broadcaster b = broadcaster("ad-" + attribute, 0, 0, 100, 0, p);
    b.attribute = attribute;
    s.broadcasters.push_back(std::move(b));
  }
  GrtAgent viewer = agent("viewer", {{0, 0, 0}});
  viewer.attributes = {"a", "b", "d"};
  s.agents.push_back(std::move(viewer));
  return s;
}

}  // namespace

const std::vector<std::string>& builtin_scenario_names() {
  static const std::vector<std::string> names = {"g1g2", "coverage-traverse", "transit-ads",
                                                 "signage", "targeted-ad"};
  return names;
}

Scenario builtin_scenario(std::string_view name) {
  if (name == "g1g2") return g1g2();
  if (name == "coverage-traverse") return coverage_traverse();
  if (name == "transit-ads") return transit_ads();
  if (name == "signage") return signage();
  if (name == "targeted-ad") return targeted_ad();
  throw Error(ErrorCode::kInvalidArgument, "unknown scenario '" + std::string(name) + "'");
}

std::map<std::string, PromptPackage> targeted_ad_packages() {
  static const char* const kStyles[] = {"bold", "calm", "retro", "minimal", "playful", "luxury"};
  std::map<std::string, PromptPackage> out;
  for (int i = 0; i < 6; ++i) {
    std::string attribute(1, static_cast<char>('a' + i));
    std::vector<ServiceElement> elements = {
        image(attribute + "-product", attribute, true, 0),
        text(attribute + "-copy", package::kRoleNarrativeHint, "Offer for audience " + attribute, 2)};
    // Half of the advertisers ask for a style; the merge keeps one.
    if (i % 2 == 0) {
      elements.push_back(text(attribute + "-style", package::kRoleStyle, kStyles[i],
                              static_cast<std::uint32_t>(1 + i)));
    }
    out.emplace(attribute, make_package("ad-" + attribute, "advertiser-" + attribute, 0, 15000,
                                        std::move(elements)));
  }
  return out;
}

}  // namespace pdm::netsim
