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


#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "pdm/cg/generate.h"
#include "pdm/cg/pipeline.h"
#include "pdm/common/error.h"
#include "pdm/ops/merge.h"
#include "support/fixtures.h"
#include "support/generators.h"
#include "support/properties.h"

namespace pdm::cg {
namespace {

using ops::OperationMode;
using testing::ad_package;

Narrative flags(std::size_t count) {
  Narrative n;
  for (std::size_t i = 0; i < count; ++i) n.flags.push_back({i, "flag", {}, 0});
  return n;
}

std::vector<FlagRange> ranges(const std::vector<SceneSample>& samples) {
  std::vector<FlagRange> out;
  for (const auto& s : samples) out.push_back(s.flag_range);
  return out;
}

std::vector<package::PromptPackage> g1g2_packages() {
  return {ad_package("P1", 0, 20000, "G1"), ad_package("P2", 10000, 20000, "G2")};
}

TEST(NarrativeTest, CitesEveryMandatoryElement) {
  ops::MergedPackage m = ops::merge_m1(g1g2_packages());
  Narrative n = generate_narrative(m, 0);
  EXPECT_GE(n.flags.size(), 3u);
  std::set<std::string> cited;
  for (const auto& f : n.flags) {
    for (const auto& r : f.element_refs) cited.insert(r.element_id);
  }
  EXPECT_TRUE(cited.contains("P1-product"));
  EXPECT_TRUE(cited.contains("P2-product"));
  EXPECT_EQ(generate_narrative(m, 0), n);
  EXPECT_THROW(generate_narrative(ops::MergedPackage{}, 0), Error);
}

TEST(SceneSamplingTest, HalfDensityPairsFlags) {
  auto samples = sample_scenes(flags(6), 0.5, {0, 30000});
  EXPECT_EQ(ranges(samples), (std::vector<FlagRange>{{0, 1}, {2, 3}, {4, 5}}));
  EXPECT_EQ(samples[0].timestamp, 0);
  EXPECT_EQ(samples[1].timestamp, 10000);
  EXPECT_EQ(samples[2].timestamp, 20000);
}

TEST(SceneSamplingTest, UnitDensityIsIdentityAndOneFlagGivesOneSample) {
  auto samples = sample_scenes(flags(6), 1.0, {0, 6000});
  ASSERT_EQ(samples.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(samples[i].flag_range, (FlagRange{i, i}));
  EXPECT_EQ(sample_scenes(flags(1), 3.0, {0, 1000}).size(), 1u);
  EXPECT_EQ(sample_scenes(flags(1), 0.01, {0, 1000}).size(), 1u);
  EXPECT_EQ(sample_scenes(flags(9), 1.0, {0, 1000}, 2).size(), 2u);
  EXPECT_THROW(sample_scenes(flags(3), 0.0, {0, 1000}), Error);
}

TEST(SceneSamplingTest, RangesPartitionFlags) {
  testing::Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const auto count = static_cast<std::size_t>(testing::uniform(rng, 1, 40));
    const double density = static_cast<double>(testing::uniform(rng, 1, 300)) / 100.0;
    auto samples = sample_scenes(flags(count), density, {0, 60000});
    std::size_t next = 0;
    for (const auto& s : samples) {
      ASSERT_EQ(s.flag_range.first, next);
      ASSERT_LE(s.flag_range.first, s.flag_range.last);
      next = s.flag_range.last + 1;
    }
    ASSERT_EQ(next, count);
  }
}

Storyboard board(std::size_t index, std::vector<PlacedObject> objects, std::string style = "plain") {
  Storyboard s;
  s.index = index;
  s.objects = std::move(objects);
  s.background = "studio";
  s.style = std::move(style);
  s.timestamp = static_cast<std::int64_t>(index) * 10000;
  return s;
}

TEST(ContinuityBookTest, EnteringObjectIsAnnounced) {
  std::vector<Storyboard> boards = {board(0, {{"G1", {1, 1}}}),
                                    board(1, {{"G1", {1, 1}}, {"G2", {3, 2}}}),
                                    board(2, {{"G2", {4, 2}}})};
  auto books = build_continuity_books(boards);
  ASSERT_EQ(books.size(), 3u);
  EXPECT_EQ(books[0].entries,
            (std::vector<ContinuityEntry>{{"G1", ContinuityAction::kPersists, GridPosition{1, 1}, 1},
                                          {"G2", ContinuityAction::kEnters, GridPosition{3, 2}, 1}}));
  EXPECT_EQ(books[1].entries,
            (std::vector<ContinuityEntry>{{"G1", ContinuityAction::kExits, std::nullopt, 1},
                                          {"G2", ContinuityAction::kMoves, GridPosition{4, 2}, 2}}));
  EXPECT_EQ(books[2].entries,
            (std::vector<ContinuityEntry>{{"G2", ContinuityAction::kPersists, std::nullopt, 2}}));
}

TEST(ContinuityBookTest, StableObjectsNeverEnterOrExit) {
  std::vector<Storyboard> boards = {board(0, {{"A", {0, 0}}}), board(1, {{"A", {0, 0}}}),
                                    board(2, {{"A", {0, 0}}})};
  for (const auto& book : build_continuity_books(boards)) {
    for (const auto& e : book.entries) EXPECT_EQ(e.action, ContinuityAction::kPersists);
  }
  auto single = build_continuity_books({board(0, {{"A", {0, 0}}})});
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].entries[0].action, ContinuityAction::kPersists);
}

TEST(SnapshotTest, IntervalsAndDescriptors) {
  auto samples = sample_scenes(flags(3), 1.0, {0, 30000});
  EXPECT_EQ(presentation_intervals(samples, {0, 30000}),
            (std::vector<ops::Interval>{{0, 10000}, {10000, 20000}, {20000, 30000}}));
  Storyboard s = board(0, {{"A", {1, 2}}});
  EXPECT_EQ(render_bss(s, {0, 1000}, 9).descriptor, render_bss(s, {0, 1000}, 9).descriptor);
  EXPECT_NE(render_bss(s, {0, 1000}, 9).descriptor,
            render_bss(board(0, {{"A", {1, 2}}}, "neon"), {0, 1000}, 9).descriptor);
}

TEST(FrameTest, EnteringObjectFillsTail) {
  Storyboard s = board(0, {{"G1", {1, 1}}});
  ContinuityBook book{0, {{"G1", ContinuityAction::kPersists, GridPosition{1, 1}, 1},
                          {"G2", ContinuityAction::kEnters, GridPosition{3, 2}, 1}}};
  FrameSequence seq = compose_frames(render_bss(s, {0, 10000}, 1), s, book, 24);
  ASSERT_EQ(seq.frames.size(), 240u);
  EXPECT_EQ(entering_tail(240), 48u);
  EXPECT_EQ(seq.frames[1].time, 41);
  EXPECT_EQ(seq.frames[239].time, 9958);
  for (std::size_t i = 0; i < 240; ++i) {
    const bool tail = i >= 192;
    EXPECT_EQ(seq.frames[i].visible_objects.contains("G2"), tail) << i;
    EXPECT_TRUE(seq.frames[i].visible_objects.contains("G1"));
    if (tail) {
      EXPECT_EQ(seq.frames[i].motion_note, "entering");
    }
    if (i > 0) {
      EXPECT_LT(seq.frames[i - 1].time, seq.frames[i].time);
    }
  }
  EXPECT_THROW(compose_frames(render_bss(s, {0, 1000}, 1), s, book, 0), Error);
}

TEST(FrameTest, PersistOnlyBookShowsStoryboardObjects) {
  Storyboard s = board(0, {{"A", {1, 1}}, {"B", {2, 2}}});
  ContinuityBook book{0, {{"A", ContinuityAction::kPersists, std::nullopt, 0},
                          {"B", ContinuityAction::kPersists, std::nullopt, 0}}};
  for (const auto& f : compose_frames(render_bss(s, {0, 2000}, 1), s, book, 30).frames) {
    EXPECT_EQ(f.visible_objects, (std::set<std::string>{"A", "B"}));
    EXPECT_EQ(f.motion_note, "static");
  }
}

TEST(BacktrackTest, Examples) {
  GeneratedContent c =
      generate_content({ad_package("P1", 0, 30000, "G1")}, OperationMode::kSingleSource, 0);
  ASSERT_EQ(c.bss_list.size(), 3u);
  EXPECT_EQ(backtrack(c, 0), (BacktrackResult{0, 0, 0}));
  EXPECT_EQ(backtrack(c, 15000), (BacktrackResult{1, 1, 1}));
  EXPECT_THROW(backtrack(c, 30000), Error);
  EXPECT_THROW(backtrack(c, -1), Error);
}

TEST(BacktrackTest, AgreesWithLinearScan) {
  testing::Rng rng(42);
  for (int i = 0; i < 40; ++i) {
    auto packages = testing::random_package_set(rng, 3, {4, 20, 10, false});
    GeneratedContent c = generate_content(packages, OperationMode::kMultiAsync, rng() % 50);
    for (int probe = 0; probe < 50; ++probe) {
      const std::int64_t t = testing::uniform(rng, c.runtime_start() - 100, c.runtime_end() + 100);
      auto expected = testing::linear_backtrack(c, t);
      if (expected) {
        BacktrackResult r = backtrack(c, t);
        ASSERT_EQ(r, (BacktrackResult{*expected, *expected, *expected})) << t;
      } else {
        ASSERT_THROW(backtrack(c, t), Error) << t;
      }
    }
  }
}

TEST(GenerateTest, DeterministicAndDiverseOverSeeds) {
  auto packages = g1g2_packages();
  std::set<std::uint64_t> frame_hashes;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratedContent c = generate_content(packages, OperationMode::kMultiAsync, seed);
    GeneratedContent again = generate_content(packages, OperationMode::kMultiAsync, seed);
    ASSERT_EQ(c, again) << seed;
    ASSERT_EQ(content_hash(c), content_hash(again));
    ASSERT_TRUE(check_content(c).empty()) << seed;
    ASSERT_TRUE(testing::continuity_violations(c).empty()) << seed;
    frame_hashes.insert(frame_sequence_hash(c));
  }
  EXPECT_EQ(frame_hashes.size(), 100u);
}

TEST(GenerateTest, SingleSourceSevenIsStable) {
  auto p = ad_package("P1", 0, 12000, "G1");
  EXPECT_EQ(content_hash(generate_content({p}, OperationMode::kSingleSource, 7)),
            content_hash(generate_content({p}, OperationMode::kSingleSource, 7)));
  EXPECT_THROW(generate_content({}, OperationMode::kSingleSource, 7), Error);
  EXPECT_THROW(generate_content(g1g2_packages(), OperationMode::kSingleSource, 7), Error);
}

TEST(GenerateTest, RandomContentsKeepContinuityAndInvariants) {
  testing::Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    std::vector<package::PromptPackage> packages;
    OperationMode mode = static_cast<OperationMode>(i % 3);
    if (mode == OperationMode::kSingleSource) {
      packages = {testing::random_package(rng, "solo", {8, 5, 20, true})};
    } else {
      packages = testing::random_chained_packages(rng, 4);
    }
    GenerateOptions options;
    options.density = static_cast<double>(testing::uniform(rng, 25, 200)) / 100.0;
    options.fps = static_cast<int>(testing::uniform(rng, 10, 60));
    GeneratedContent c = generate_content(packages, mode, rng() % 1000, options);
    ASSERT_EQ(testing::playback_gaps(c), 0u) << "iteration " << i;
    auto problems = check_content(c);
    ASSERT_TRUE(problems.empty()) << "iteration " << i << ": " << problems.front();
    auto violations = testing::continuity_violations(c);
    ASSERT_TRUE(violations.empty()) << "iteration " << i << ": " << violations.front();
    ASSERT_EQ(c.storyboards.size(), c.bss_list.size());
    ASSERT_EQ(c.continuity_books.size(), c.bss_list.size());
    // Mandatory elements that survive the merge show up somewhere; a
    // mandatory background or style may lose its role to another package.
    const auto shown = features_in(c, {c.runtime_start(), c.runtime_end()});
    for (const auto& seg : c.segments) {
      for (const auto& me : seg.merged.elements) {
        if (me.element.mandatory && !me.element.feature_tag.empty()) {
          ASSERT_TRUE(shown.contains(me.element.feature_tag)) << me.element.feature_tag;
        }
      }
    }
  }
}

TEST(ContentCheckTest, DetectsTampering) {
  GeneratedContent c = generate_content(g1g2_packages(), OperationMode::kMultiAsync, 1);
  ASSERT_TRUE(check_content(c).empty());
  GeneratedContent broken = c;
  broken.bss_list[1].presentation_interval.start += 1;
  EXPECT_FALSE(check_content(broken).empty());
  broken = c;
  broken.continuity_books.pop_back();
  EXPECT_FALSE(check_content(broken).empty());
  broken = c;
  for (auto& seq : broken.frames) {
    for (auto& f : seq.frames) f.visible_objects.erase("G2");
  }
  EXPECT_FALSE(check_content(broken).empty());
}

}  // namespace
}  // namespace pdm::cg
