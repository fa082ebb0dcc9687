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


#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "pdm/cg/generate.h"
#include "pdm/common/error.h"
#include "pdm/ops/augmentation.h"
#include "pdm/ops/execute.h"
#include "pdm/ops/merge.h"
#include "pdm/ops/residual.h"
#include "pdm/ops/timeline.h"
#include "support/fixtures.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace pdm::ops {
namespace {

using package::PromptPackage;
using testing::ad_package;
using testing::element;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

TEST(MergeTest, SinglePackageIsItsTopK) {
  PromptPackage p = ad_package("P", 0, 1000, "G1");
  p.elements.push_back(element("hint", "narrative-hint", "", false, 3));
  MergedPackage m = merge_m1({p}, {1, std::nullopt});
  EXPECT_EQ(m.main_package_id, "P");
  EXPECT_TRUE(m.sub_package_ids.empty());
  ASSERT_EQ(m.elements.size(), 1u);
  EXPECT_EQ(m.elements[0].element.element_id, "P-product");
  EXPECT_TRUE(m.conflict_log.empty());
}

TEST(MergeTest, TwoProductsBothSurvive) {
  MergedPackage m = merge_m1({ad_package("P2", 10000, 20000, "G2"), ad_package("P1", 0, 20000, "G1")});
  EXPECT_EQ(m.main_package_id, "P1");
  EXPECT_EQ(m.sub_package_ids, std::vector<std::string>{"P2"});
  std::set<std::string> tags;
  for (const auto& e : m.elements) tags.insert(e.element.feature_tag);
  EXPECT_EQ(tags, (std::set<std::string>{"G1", "G2"}));
  EXPECT_EQ(m.schedule, (package::Schedule{0, 30000}));
}

TEST(MergeTest, LowerPriorityBackgroundWins) {
  PromptPackage a = ad_package("A", 0, 1000, "GA");
  a.elements.push_back(element("sky", "background", "sky", false, 2));
  PromptPackage b = ad_package("B", 0, 1000, "GB");
  b.elements.push_back(element("sea", "background", "sea", false, 1));
  MergedPackage m = merge_m1({a, b});
  ASSERT_EQ(m.conflict_log.size(), 1u);
  EXPECT_EQ(m.conflict_log[0].role, "background");
  EXPECT_EQ(m.conflict_log[0].winner, (ElementRef{"B", "sea"}));
  EXPECT_EQ(m.conflict_log[0].losers, std::vector<ElementRef>{(ElementRef{"A", "sky"})});
  EXPECT_EQ(m.find({"A", "sky"}), nullptr);
  EXPECT_NE(m.find({"B", "sea"}), nullptr);
}

TEST(MergeTest, MainOverride) {
  std::vector<PromptPackage> in = {ad_package("P1", 0, 100, "G1"), ad_package("P2", 50, 100, "G2")};
  MergedPackage m = merge_m1(in, {8, "P2"});
  EXPECT_EQ(m.main_package_id, "P2");
  EXPECT_EQ(m.sub_package_ids, std::vector<std::string>{"P1"});
  EXPECT_EQ(code_of([&] { merge_m1(in, {8, "P9"}); }), ErrorCode::kUnknownMain);
}

TEST(MergeTest, Errors) {
  EXPECT_EQ(code_of([] { merge_m1({}); }), ErrorCode::kEmptyInput);
  PromptPackage p = ad_package("P", 0, 100, "G");
  EXPECT_EQ(code_of([&] { merge_m1({p, p}); }), ErrorCode::kDuplicatePackage);
  PromptPackage bad = p;
  bad.schedule.duration = 0;
  EXPECT_EQ(code_of([&] { merge_m1({bad}); }), ErrorCode::kValidation);
}

TEST(MergeTest, MatchesExhaustiveOracleAndIgnoresInputOrder) {
  testing::Rng rng(31);
  testing::PackageShape shape;
  shape.max_elements = 12;
  for (int i = 0; i < 500; ++i) {
    auto packages = testing::random_package_set(rng, 4, shape);
    const std::size_t k = static_cast<std::size_t>(testing::uniform(rng, 1, 12));
    MergedPackage m = merge_m1(packages, {k, std::nullopt});
    ASSERT_EQ(m, testing::merge_oracle(packages, k)) << "iteration " << i;
    auto permuted = packages;
    std::shuffle(permuted.begin(), permuted.end(), rng);
    ASSERT_EQ(merge_m1(permuted, {k, std::nullopt}), m) << "iteration " << i;
  }
}

TEST(TimelineTest, TwoPackageExample) {
  Timeline t = plan_timeline({ad_package("P1", 0, 20000, "G1"), ad_package("P2", 10000, 20000, "G2")});
  ASSERT_EQ(t.segments.size(), 3u);
  EXPECT_EQ(t.segments[0].interval, (Interval{0, 10000}));
  EXPECT_EQ(t.segments[0].main_id, "P1");
  EXPECT_EQ(t.segments[0].features_present, (std::set<std::string>{"G1"}));
  EXPECT_EQ(t.segments[1].main_id, "P1");
  EXPECT_EQ(t.segments[1].sub_ids, std::vector<std::string>{"P2"});
  EXPECT_EQ(t.segments[1].features_present, (std::set<std::string>{"G1", "G2"}));
  EXPECT_EQ(t.segments[1].fade_out, (std::set<std::string>{"G1"}));
  EXPECT_EQ(t.segments[2].interval, (Interval{20000, 30000}));
  EXPECT_EQ(t.segments[2].main_id, "P2");
  EXPECT_EQ(t.segments[2].features_present, (std::set<std::string>{"G2"}));
}

TEST(TimelineTest, ThreePackageExample) {
  Timeline t = plan_timeline({ad_package("P1", 0, 20000, "G1"), ad_package("P2", 10000, 20000, "G2"),
                              ad_package("P3", 15000, 20000, "G3")});
  std::vector<Interval> intervals;
  std::vector<std::string> mains;
  for (const auto& s : t.segments) {
    intervals.push_back(s.interval);
    mains.push_back(s.main_id);
  }
  EXPECT_EQ(intervals, (std::vector<Interval>{{0, 10000}, {10000, 15000}, {15000, 20000},
                                              {20000, 30000}, {30000, 35000}}));
  EXPECT_EQ(mains, (std::vector<std::string>{"P1", "P1", "P1", "P2", "P3"}));
  EXPECT_EQ(t.segments[2].sub_ids, (std::vector<std::string>{"P2", "P3"}));
  EXPECT_EQ(t.segments[3].sub_ids, std::vector<std::string>{"P3"});
}

TEST(TimelineTest, MatchesEndpointOracle) {
  testing::Rng rng(32);
  testing::PackageShape shape;
  shape.max_elements = 3;
  shape.graphs = false;
  for (int i = 0; i < 500; ++i) {
    auto packages = testing::random_package_set(rng, 6, shape);
    Timeline t = plan_timeline(packages);
    ASSERT_EQ(t.segments, testing::timeline_oracle(packages)) << "iteration " << i;

    std::set<std::int64_t> endpoints;
    for (const auto& p : packages) {
      endpoints.insert(p.schedule.start);
      endpoints.insert(p.schedule.end());
    }
    auto active_at = [&](std::int64_t x) {
      return std::any_of(packages.begin(), packages.end(),
                         [&](const PromptPackage& p) { return p.schedule.contains(x); });
    };
    std::int64_t covered = 0;
    for (std::size_t s = 0; s < t.segments.size(); ++s) {
      const auto& seg = t.segments[s];
      ASSERT_LT(seg.interval.start, seg.interval.end);
      ASSERT_TRUE(endpoints.contains(seg.interval.start));
      ASSERT_TRUE(endpoints.contains(seg.interval.end));
      covered += seg.interval.length();
      if (s > 0) {
        const auto& prev = t.segments[s - 1];
        ASSERT_LE(prev.interval.end, seg.interval.start);
        // A gap between segments is a stretch where nothing is scheduled.
        for (std::int64_t x = prev.interval.end; x < seg.interval.start; x += 500) {
          ASSERT_FALSE(active_at(x));
        }
      }
      const PromptPackage* main = nullptr;
      for (const auto& p : packages) {
        if (p.package_id == seg.main_id) main = &p;
      }
      ASSERT_NE(main, nullptr);
      ASSERT_LE(main->schedule.start, seg.interval.start);
      ASSERT_GE(main->schedule.end(), seg.interval.end);
      for (const auto& p : packages) {
        bool active = p.schedule.start <= seg.interval.start && p.schedule.end() >= seg.interval.end;
        if (active) {
          ASSERT_FALSE(schedule_precedes(p, *main));
        }
      }
    }
    std::int64_t union_length = 0;
    for (std::int64_t x = *endpoints.begin(); x < *endpoints.rbegin(); x += 1000) {
      if (active_at(x)) union_length += 1000;
    }
    ASSERT_EQ(covered, union_length) << "iteration " << i;
  }
}

TEST(TimelineTest, FeaturesVanishAfterScheduleEnd) {
  testing::Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    auto packages = testing::random_package_set(rng, 5, {3, 10, 10, false});
    Timeline t = plan_timeline(packages);
    for (const auto& seg : t.segments) {
      for (const auto& tag : seg.features_present) {
        bool owner_active = false;
        for (const auto& p : packages) {
          if (mandatory_features(p).contains(tag) && p.schedule.start <= seg.interval.start &&
              p.schedule.end() >= seg.interval.end) {
            owner_active = true;
          }
        }
        ASSERT_TRUE(owner_active) << tag;
      }
    }
  }
}

TEST(TimelineTest, DuplicatePackageRejected) {
  PromptPackage p = ad_package("P", 0, 100, "G");
  EXPECT_EQ(code_of([&] { plan_timeline({p, p}); }), ErrorCode::kDuplicatePackage);
}

TEST(TimelineM2Test, ArrivalSplitsActiveContent) {
  cg::GeneratedContent active =
      cg::generate_content({ad_package("P1", 0, 20000, "G1")}, OperationMode::kSingleSource, 1);
  Timeline t = plan_timeline_m2(active, {ad_package("P2", 10000, 20000, "G2")});
  ASSERT_EQ(t.segments.size(), 2u);
  EXPECT_EQ(t.segments[0].interval, (Interval{10000, 20000}));
  EXPECT_EQ(t.segments[0].main_id, "P1");
  EXPECT_EQ(t.segments[0].fade_out, (std::set<std::string>{"G1"}));
  EXPECT_EQ(t.segments[1].main_id, "P2");

  Timeline none = plan_timeline_m2(active, {});
  ASSERT_EQ(none.segments.size(), 1u);
  EXPECT_EQ(none.segments[0].interval, (Interval{0, 20000}));
}

TEST(TimelineM2Test, Errors) {
  cg::GeneratedContent active =
      cg::generate_content({ad_package("P1", 0, 20000, "G1")}, OperationMode::kSingleSource, 1);
  EXPECT_EQ(code_of([&] { plan_timeline_m2(active, {ad_package("old", 0, 5000, "X")}, 8000); }),
            ErrorCode::kStaleArrival);
  EXPECT_EQ(code_of([&] {
              plan_timeline_m2(active, {ad_package("b", 9000, 5000, "X"), ad_package("a", 8000, 5000, "Y")});
            }),
            ErrorCode::kInvalidArgument);
}

cg::GeneratedContent three_scene_content() {
  cg::GeneratedContent c =
      cg::generate_content({ad_package("P1", 0, 30000, "G1")}, OperationMode::kSingleSource, 5);
  EXPECT_EQ(c.scene_samples.size(), 3u);
  return c;
}

std::vector<std::size_t> sample_indices(const ResidualPackage& r) {
  std::vector<std::size_t> out;
  for (const auto& s : r.remaining_scene_samples) out.push_back(s.index);
  return out;
}

TEST(ResidualTest, Examples) {
  cg::GeneratedContent c = three_scene_content();
  EXPECT_EQ(sample_indices(residual(c, 0)), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(residual(c, 0).remaining_flags.size(), c.narrative.flags.size());
  EXPECT_EQ(sample_indices(residual(c, 10000)), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(sample_indices(residual(c, 29999)), (std::vector<std::size_t>{2}));
  EXPECT_EQ(residual(c, 10000).origin_package_id, "P1");
  EXPECT_EQ(code_of([&] { residual(c, 30000); }), ErrorCode::kNothingRemaining);
}

TEST(ResidualTest, AgreesWithBacktrack) {
  testing::Rng rng(34);
  for (int i = 0; i < 50; ++i) {
    auto packages = testing::random_chained_packages(rng, 3);
    cg::GeneratedContent c = cg::generate_content(packages, OperationMode::kMultiAsync, rng() % 100);
    for (int probe = 0; probe < 10; ++probe) {
      const std::int64_t t = testing::uniform(rng, c.runtime_start(), c.runtime_end() - 1);
      const std::size_t k = cg::backtrack(c, t).scene_sample;
      std::vector<std::size_t> expected;
      for (std::size_t j = k; j < c.scene_samples.size(); ++j) expected.push_back(j);
      ASSERT_EQ(sample_indices(residual(c, t)), expected);
    }
  }
}

TEST(ResidualTest, PackagesKeepMandatoryElementsAndRemainingSchedule) {
  cg::GeneratedContent c = three_scene_content();
  auto packages = residual_packages(residual(c, 12000), c);
  ASSERT_EQ(packages.size(), 1u);
  EXPECT_EQ(packages[0].package_id, "P1");
  EXPECT_EQ(packages[0].schedule, (package::Schedule{12000, 18000}));
  EXPECT_NE(packages[0].find("P1-product"), nullptr);
  EXPECT_TRUE(package::validate_package(packages[0]).ok());
}

TEST(ExecuteTest, SingleSourceMatchesDirectGeneration) {
  PromptPackage p = ad_package("P1", 0, 20000, "G1");
  cg::GeneratedContent direct = cg::generate_content({p}, OperationMode::kSingleSource, 7);
  cg::GeneratedContent executed = execute({{0, {p}, {}}}, OperationMode::kSingleSource, 7);
  EXPECT_EQ(cg::content_hash(direct), cg::content_hash(executed));
  EXPECT_EQ(direct, executed);
}

TEST(ExecuteTest, AsyncArrivalsFollowTimeline) {
  PromptPackage p1 = ad_package("P1", 0, 20000, "G1");
  PromptPackage p2 = ad_package("P2", 10000, 20000, "G2");
  std::vector<Event> events = {{0, {p1}, {}}, {10000, {p2}, {}}};
  cg::GeneratedContent c = execute(events, OperationMode::kMultiAsync, 3);
  EXPECT_TRUE(cg::check_content(c).empty());
  ASSERT_EQ(c.segments.size(), 3u);
  const std::vector<std::set<std::string>> expected = {{"G1"}, {"G1", "G2"}, {"G2"}};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(c.segments[i].timeline.features_present, expected[i]);
    EXPECT_EQ(cg::features_in(c, c.segments[i].timeline.interval), expected[i]);
  }
  EXPECT_EQ(cg::content_hash(execute(events, OperationMode::kMultiAsync, 3)), cg::content_hash(c));
  // Frames never show G1 once P1 has ended.
  EXPECT_FALSE(cg::features_in(c, {20000, 30000}).contains("G1"));
}

TEST(ExecuteTest, SyncMergesIntoOneSegment) {
  cg::GeneratedContent c = execute({{0, {ad_package("A", 0, 8000, "GA"), ad_package("B", 0, 8000, "GB")}, {}}},
                                   OperationMode::kMultiSync, 1);
  ASSERT_EQ(c.segments.size(), 1u);
  EXPECT_EQ(cg::features_in(c, {0, 8000}), (std::set<std::string>{"GA", "GB"}));
}

TEST(ExecuteTest, ModeAndOrderErrors) {
  PromptPackage a = ad_package("A", 0, 8000, "GA");
  PromptPackage b = ad_package("B", 0, 8000, "GB");
  EXPECT_EQ(code_of([&] { execute({{0, {a, b}, {}}}, OperationMode::kSingleSource, 0); }),
            ErrorCode::kModeMismatch);
  EXPECT_EQ(code_of([&] { execute({{0, {a}, {}}, {1000, {b}, {}}}, OperationMode::kMultiSync, 0); }),
            ErrorCode::kModeMismatch);
  EXPECT_EQ(code_of([&] { execute({{1000, {a}, {}}, {0, {b}, {}}}, OperationMode::kMultiAsync, 0); }),
            ErrorCode::kInvalidArgument);
}

TEST(AugmentationTest, EmptyProfileIsIdentity) {
  PromptPackage p = ad_package("P", 0, 1000, "G");
  AugmentationResult r = apply_augmentation(p, {});
  EXPECT_EQ(r.package, p);
  EXPECT_TRUE(r.log.empty());
}

TEST(AugmentationTest, LocationHookInsertsBackdrop) {
  PromptPackage p = ad_package("P", 0, 1000, "G");
  p.elements.push_back(element("old-bg", "background", "studio", false, 1));
  AugmentationResult r = apply_augmentation(p, location_hook_profile(10.4, -2.6));
  EXPECT_EQ(mock_location_tag(10.4, -2.6), "street-view:loc(10,-3)");
  const auto* backdrop = r.package.find("location-backdrop");
  ASSERT_NE(backdrop, nullptr);
  EXPECT_EQ(backdrop->role, "background");
  EXPECT_EQ(backdrop->feature_tag, "street-view:loc(10,-3)");
  EXPECT_EQ(r.package.find("old-bg"), nullptr);
}

TEST(AugmentationTest, ReplaceRewritesEveryMatch) {
  PromptPackage p = ad_package("P", 0, 1000, "actor-A");
  p.elements.push_back(element("cameo", "object", "actor-A", false, 2));
  p.elements.push_back(element("prop", "object", "prop", false, 2));
  Directive d;
  d.kind = DirectiveKind::kReplace;
  d.from_tag = "actor-A";
  d.to_tag = "actor-B";
  d.replacement_payload = package::Payload{to_bytes("actor B")};
  AugmentationResult r = apply_augmentation(p, {{d}});
  for (const auto& e : r.package.elements) {
    EXPECT_NE(e.feature_tag, "actor-A");
    if (e.feature_tag == "actor-B") {
      EXPECT_EQ(*e.bytes(), to_bytes("actor B"));
    }
  }
  EXPECT_EQ(r.package.find("prop")->feature_tag, "prop");
  d.from_tag = "actor-Z";
  EXPECT_EQ(code_of([&] { apply_augmentation(p, {{d}}); }), ErrorCode::kUnknownFeature);
}

TEST(AugmentationTest, MandatoryRemovalIsRefused) {
  PromptPackage p = ad_package("P", 0, 1000, "G");
  p.elements.push_back(element("extra", "object", "X", false, 1));
  Directive d;
  d.kind = DirectiveKind::kRemove;
  d.role = "object";
  AugmentationResult r = apply_augmentation(p, {{d}});
  EXPECT_NE(r.package.find("P-product"), nullptr);
  EXPECT_EQ(r.package.find("extra"), nullptr);
  EXPECT_TRUE(std::any_of(r.log.begin(), r.log.end(),
                          [](const std::string& s) { return s.find("refused") != std::string::npos; }));
}

TEST(AugmentationTest, InvalidResultIsRejected) {
  PromptPackage p = ad_package("P", 0, 1000, "G");
  Directive d;
  d.kind = DirectiveKind::kInsert;
  d.element = element("P-product", "object", "dup", false, 0);
  EXPECT_EQ(code_of([&] { apply_augmentation(p, {{d}}); }), ErrorCode::kValidation);
}

}  // namespace
}  // namespace pdm::ops
