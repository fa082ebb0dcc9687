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


// Checks every acceptance criterion of the system and prints one PASS/FAIL
// line per criterion. Exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pdm/cg/generate.h"
#include "pdm/cli/cli.h"
#include "pdm/cli/targeted_ad.h"
#include "pdm/netsim/builtin_scenarios.h"
#include "pdm/netsim/coverage.h"
#include "pdm/netsim/simulator.h"
#include "pdm/netsim/traffic.h"
#include "pdm/ops/merge.h"
#include "pdm/ops/timeline.h"
#include "pdm/package/package_codec.h"
#include "pdm/package/package_json.h"
#include "pdm/semdesc/graph_codec.h"
#include "pdm/semdesc/mpeg7_import.h"
#include "pdm/semdesc/script_compiler.h"
#include "support/fixtures.h"
#include "support/generators.h"
#include "support/oracles.h"
#include "support/properties.h"

namespace {

using namespace pdm;

const std::filesystem::path kDataDir = PDM_DATA_DIR;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string join(const std::set<std::string>& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? "," : "") + x;
  return out + "}";
}

Verdict g1g2_reproduction() {
  Verdict v;
  const auto started = std::chrono::steady_clock::now();
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"demo", "g1g2", "--format", "structured"}, out, err);
  const auto elapsed = std::chrono::steady_clock::now() - started;
  v.require(code == cli::kExitOk, "demo g1g2 exited with " + std::to_string(code));
  v.require(elapsed < std::chrono::seconds(1), "demo g1g2 took longer than 1 s");

  netsim::Scenario s = netsim::builtin_scenario("g1g2");
  netsim::SimulationTrace trace = netsim::run_scenario(s);
  const auto& content = trace.agents.at(0).content;
  v.require(content.has_value(), "no content generated");
  if (!content) return v;
  const std::vector<std::set<std::string>> features = {{"G1"}, {"G1", "G2"}, {"G2"}};
  const std::vector<std::string> mains = {"P1", "P1", "P2"};
  v.require(content->segments.size() == 3, std::to_string(content->segments.size()) + " segments");
  for (std::size_t i = 0; i < std::min<std::size_t>(3, content->segments.size()); ++i) {
    const auto& seg = content->segments[i];
    v.require(seg.timeline.features_present == features[i],
              "segment " + std::to_string(i) + " has " + join(seg.timeline.features_present));
    v.require(seg.timeline.main_id == mains[i], "segment " + std::to_string(i) + " main " + seg.timeline.main_id);
    v.require(cg::features_in(*content, seg.timeline.interval) == features[i],
              "frames of segment " + std::to_string(i) + " show " +
                  join(cg::features_in(*content, seg.timeline.interval)));
  }
  if (v.pass) v.detail = "3 segments {G1},{G1,G2},{G2} mains P1,P1,P2";
  return v;
}

Verdict coverage_traversal() {
  Verdict v;
  netsim::Scenario s = netsim::builtin_scenario("coverage-traverse");
  netsim::SimulationTrace trace = netsim::run_scenario(s);
  const auto& agent = trace.agents.at(0);
  std::vector<std::set<std::string>> sets;
  for (const auto& change : agent.transitions) sets.push_back(change.visible);
  const std::vector<std::set<std::string>> expected = {{"A", "B", "C"}, {"C", "D"}, {"A", "E", "F"}};
  v.require(sets == expected, "visible-set sequence differs");
  v.require(!agent.phases.empty(), "no phases");
  for (const auto& phase : agent.phases) {
    std::set<std::string> want;
    for (const auto& id : phase.visible) {
      auto tags = ops::mandatory_features(s.find(id)->package);
      want.insert(tags.begin(), tags.end());
    }
    v.require(phase.features == want, "phase at " + std::to_string(phase.interval.start) + " shows " +
                                          join(phase.features) + ", expected " + join(want));
  }
  if (v.pass) v.detail = "{A,B,C} -> {C,D} -> {A,E,F}, phase features equal each union";
  return v;
}

Verdict traffic_arithmetic() {
  Verdict v;
  netsim::TrafficReport r =
      netsim::traffic_for(0, 30000, netsim::BaselineVideo{}, {11'600'000'000ULL, 2});
  v.require(r.baseline_equivalent_bytes == 37'500'000, "baseline " + std::to_string(r.baseline_equivalent_bytes));
  v.require(r.model_transfer_bytes == 23'200'000'000ULL, "model " + std::to_string(r.model_transfer_bytes));
  v.require(r.model_transfer_bytes >= 20'000'000'000ULL && r.model_transfer_bytes <= 25'000'000'000ULL,
            "model transfer outside the 20-25 GB band");
  double worst = 0;
  for (const auto& name : netsim::builtin_scenario_names()) {
    netsim::Scenario s = netsim::builtin_scenario(name);
    netsim::TrafficReport t = netsim::traffic_report(netsim::run_scenario(s), s);
    v.require(!t.degenerate, name + " played no content");
    v.require(t.prompt_to_baseline_ratio < 0.005, name + " ratio " + std::to_string(t.prompt_to_baseline_ratio));
    worst = std::max(worst, t.prompt_to_baseline_ratio);
  }
  if (v.pass) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "baseline 37500000 B, model 23200000000 B, worst prompt/baseline %.6f",
                  worst);
    v.detail = buf;
  }
  return v;
}

Verdict codec_soundness() {
  Verdict v;
  testing::Rng rng(1001);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    package::PromptPackage p = testing::random_package(rng, "pkg" + std::to_string(i));
    Bytes wire = package::encode_package(p);
    package::PromptPackage back = package::decode_package(wire);
    if (!(back == package::canonical(p)) || package::encode_package(back) != wire) ++failures;
    package::PromptPackage shuffled = p;
    std::shuffle(shuffled.elements.begin(), shuffled.elements.end(), rng);
    if (package::encode_package(shuffled) != wire) ++failures;
  }
  v.require(failures == 0, std::to_string(failures) + " failures");
  if (v.pass) v.detail = "1000 round trips bit-exact, encoding order invariant";
  return v;
}

Verdict merge_correctness() {
  Verdict v;
  testing::Rng rng(1002);
  int failures = 0;
  for (int i = 0; i < 500; ++i) {
    auto packages = testing::random_package_set(rng, 4, {12, 10, 10, true});
    const auto k = static_cast<std::size_t>(testing::uniform(rng, 1, 12));
    ops::MergedPackage m = ops::merge_m1(packages, {k, std::nullopt});
    if (!(m == testing::merge_oracle(packages, k))) ++failures;
    std::shuffle(packages.begin(), packages.end(), rng);
    if (!(ops::merge_m1(packages, {k, std::nullopt}) == m)) ++failures;
  }
  v.require(failures == 0, std::to_string(failures) + " failures");
  if (v.pass) v.detail = "500 multisets equal the exhaustive oracle and are permutation invariant";
  return v;
}

Verdict timeline_partition() {
  Verdict v;
  testing::Rng rng(1003);
  int failures = 0;
  for (int i = 0; i < 500; ++i) {
    auto packages = testing::random_package_set(rng, 6, {3, 10, 10, false});
    ops::Timeline t = ops::plan_timeline(packages);
    if (!(t.segments == testing::timeline_oracle(packages))) ++failures;
    std::set<std::int64_t> endpoints;
    for (const auto& p : packages) {
      endpoints.insert(p.schedule.start);
      endpoints.insert(p.schedule.end());
    }
    std::int64_t covered = 0;
    for (std::size_t s = 0; s < t.segments.size(); ++s) {
      const auto& iv = t.segments[s].interval;
      covered += iv.length();
      if (!endpoints.contains(iv.start) || !endpoints.contains(iv.end)) ++failures;
      if (s > 0 && t.segments[s - 1].interval.end > iv.start) ++failures;
    }
    std::int64_t union_length = 0;
    for (std::int64_t x = *endpoints.begin(); x < *endpoints.rbegin(); x += 1000) {
      if (std::any_of(packages.begin(), packages.end(),
                      [&](const auto& p) { return p.schedule.contains(x); })) {
        union_length += 1000;
      }
    }
    if (covered != union_length) ++failures;
  }
  v.require(failures == 0, std::to_string(failures) + " failures");
  if (v.pass) v.detail = "500 schedule sets match the endpoint oracle and cover the union";
  return v;
}

Verdict determinism_and_diversity() {
  Verdict v;
  const std::vector<package::PromptPackage> packages = {testing::ad_package("P1", 0, 20000, "G1"),
                                                        testing::ad_package("P2", 10000, 20000, "G2")};
  std::set<std::uint64_t> hashes;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    cg::GeneratedContent c = cg::generate_content(packages, ops::OperationMode::kMultiAsync, seed);
    cg::GeneratedContent again = cg::generate_content(packages, ops::OperationMode::kMultiAsync, seed);
    v.require(c == again && cg::content_hash(c) == cg::content_hash(again),
              "seed " + std::to_string(seed) + " is not reproducible");
    auto problems = cg::check_content(c);
    v.require(problems.empty(), "seed " + std::to_string(seed) + ": " + (problems.empty() ? "" : problems[0]));
    v.require(testing::continuity_violations(c).empty(), "seed " + std::to_string(seed) + " breaks continuity");
    hashes.insert(cg::frame_sequence_hash(c));
  }
  v.require(hashes.size() == 100, std::to_string(hashes.size()) + " distinct frame hashes");
  if (v.pass) v.detail = "100 seeds reproducible, 100 distinct frame-sequence hashes, invariants hold";
  return v;
}

Verdict continuity_rule() {
  Verdict v;
  testing::Rng rng(1004);
  std::size_t entering = 0;
  for (int i = 0; i < 200; ++i) {
    const auto mode = static_cast<ops::OperationMode>(i % 3);
    auto packages = mode == ops::OperationMode::kSingleSource
                        ? std::vector<package::PromptPackage>{testing::random_package(rng, "solo", {8, 5, 20, true})}
                        : testing::random_chained_packages(rng, 4);
    cg::GenerateOptions options;
    options.density = static_cast<double>(testing::uniform(rng, 25, 200)) / 100.0;
    cg::GeneratedContent c = cg::generate_content(packages, mode, rng() % 1000, options);
    v.require(testing::playback_gaps(c) == 0, "content " + std::to_string(i) + " has playback gaps");
    auto violations = testing::continuity_violations(c);
    v.require(violations.empty(), "content " + std::to_string(i) + ": " + (violations.empty() ? "" : violations[0]));
    for (std::size_t n = 0; n + 1 < c.storyboards.size(); ++n) {
      for (const auto& o : c.storyboards[n + 1].objects) {
        if (c.storyboards[n].find(o.object_id) == nullptr) ++entering;
      }
    }
  }
  v.require(entering > 0, "no entering objects were generated");
  if (v.pass) v.detail = "200 contents, " + std::to_string(entering) + " entering objects, 0 violations";
  return v;
}

Verdict semantic_description() {
  Verdict v;
  semdesc::SemanticGraph g = semdesc::import_mpeg7(package::read_file(kDataDir / "semdesc" / "concert.xml"));
  v.require(g.nodes.size() == 3, std::to_string(g.nodes.size()) + " nodes");
  std::set<std::string> relations;
  for (const auto& r : g.relations) relations.insert(r.source + " " + r.relation + " " + r.target);
  v.require(relations == std::set<std::string>{"Concert performedBy PianistYim", "Concert setting ConcertHall",
                                               "PianistYim hasPerformed WaltzOfTheFlowers",
                                               "PianistYim identity PianistYim"},
            "unexpected relations");
  const std::string script = semdesc::compile_to_script(g);
  for (const char* needle : {"Yim", "Waltz of the Flowers", "Concert Hall"}) {
    v.require(script.find(needle) != std::string::npos, std::string("script lacks ") + needle);
  }
  std::string sizes;
  for (const auto& entry : std::filesystem::directory_iterator(kDataDir / "semdesc")) {
    semdesc::SemanticGraph doc = semdesc::import_mpeg7(package::read_file(entry.path()));
    const auto graph = semdesc::graph_wire_size(doc);
    const auto text = semdesc::compile_to_script(doc).size();
    v.require(graph < text, entry.path().filename().string() + ": graph " + std::to_string(graph) +
                                " >= script " + std::to_string(text));
    sizes += " " + entry.path().stem().string() + " " + std::to_string(graph) + "<" + std::to_string(text);
  }
  if (v.pass) v.detail = "3 nodes, 4 relations, script names all entities;" + sizes;
  return v;
}

Verdict targeted_ad() {
  Verdict v;
  const auto packages = netsim::targeted_ad_packages();
  for (unsigned mask = 1; mask < 64; ++mask) {
    std::set<std::string> subset;
    for (unsigned i = 0; i < 6; ++i) {
      if (mask & (1u << i)) subset.insert(std::string(1, static_cast<char>('a' + i)));
    }
    auto features = cli::feature_set(cli::targeted_ad_assemble(subset, packages));
    v.require(features == subset, join(subset) + " assembled " + join(features));
  }
  if (v.pass) v.detail = "63 subsets assemble exactly";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"G1/G2 reproduction", g1g2_reproduction},
      {"coverage traversal", coverage_traversal},
      {"traffic arithmetic", traffic_arithmetic},
      {"codec soundness", codec_soundness},
      {"merge correctness", merge_correctness},
      {"timeline partition", timeline_partition},
      {"determinism and diversity", determinism_and_diversity},
      {"continuity rule", continuity_rule},
      {"semantic description", semantic_description},
      {"targeted ad", targeted_ad},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str());
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
