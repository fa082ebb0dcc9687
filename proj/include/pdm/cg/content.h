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

#ifndef PDM_CG_CONTENT_H_
#define PDM_CG_CONTENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pdm/ops/types.h"
#include "pdm/package/prompt_package.h"

namespace pdm::cg {

inline constexpr int kGridColumns = 8;
inline constexpr int kGridRows = 6;
inline constexpr int kDefaultFps = 24;

struct GridPosition {
  int column = 0;
  int row = 0;

  bool valid() const {
    return column >= 0 && column < kGridColumns && row >= 0 && row < kGridRows;
  }
  auto operator<=>(const GridPosition&) const = default;
};

struct NarrativeFlag {
  std::size_t index = 0;
  std::string text;
  std::vector<ops::ElementRef> element_refs;
  std::int64_t time_hint = 0;

  bool operator==(const NarrativeFlag&) const = default;
};

struct Narrative {
  std::vector<NarrativeFlag> flags;
  std::uint64_t seed = 0;

  bool operator==(const Narrative&) const = default;
};

struct FlagRange {
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive

  bool operator==(const FlagRange&) const = default;
};

struct SceneSample {
  std::size_t index = 0;
  FlagRange flag_range;
  std::string description;
  std::vector<ops::ElementRef> element_refs;
  std::int64_t timestamp = 0;

  bool operator==(const SceneSample&) const = default;
};

struct PlacedObject {
  std::string object_id;
  GridPosition position;

  bool operator==(const PlacedObject&) const = default;
};

struct Storyboard {
  std::size_t index = 0;
  // Sorted by object_id.
  std::vector<PlacedObject> objects;
  std::string background;
  std::string style;
  std::vector<ops::ElementRef> element_refs;
  std::int64_t timestamp = 0;

  const PlacedObject* find(std::string_view object_id) const;

  bool operator==(const Storyboard&) const = default;
};

enum class ContinuityAction { kEnters, kExits, kMoves, kPersists };

std::string_view continuity_action_name(ContinuityAction action);

struct ContinuityEntry {
  std::string object_id;
  ContinuityAction action = ContinuityAction::kPersists;
  std::optional<GridPosition> target_position;
  std::size_t linked_storyboard = 0;

  bool operator==(const ContinuityEntry&) const = default;
};

struct ContinuityBook {
  std::size_t index = 0;
  std::vector<ContinuityEntry> entries;

  bool operator==(const ContinuityBook&) const = default;
};

struct BaseSceneSnapshot {
  std::size_t index = 0;
  std::string descriptor;
  ops::Interval presentation_interval;
  std::uint64_t seed = 0;

  bool operator==(const BaseSceneSnapshot&) const = default;
};

struct FrameDescriptor {
  std::int64_t time = 0;
  std::set<std::string> visible_objects;
  std::string background;
  std::string style;
  std::string motion_note;
  std::string camera;

  bool operator==(const FrameDescriptor&) const = default;
};

struct FrameSequence {
  std::size_t bss_index = 0;
  int fps = kDefaultFps;
  std::vector<FrameDescriptor> frames;

  bool operator==(const FrameSequence&) const = default;
};

// One planned stretch of content driven by a single merged package.
struct ContentSegment {
  ops::TimeSegment timeline;
  ops::MergedPackage merged;
  std::size_t first_sample = 0;
  std::size_t sample_count = 0;
  // The first storyboard carries the previous scene's objects forward.
  bool bridged = false;

  bool operator==(const ContentSegment&) const = default;
};

struct GeneratedContent {
  ops::OperationMode mode = ops::OperationMode::kSingleSource;
  std::uint64_t seed = 0;
  int fps = kDefaultFps;
  Narrative narrative;
  std::vector<SceneSample> scene_samples;
  std::vector<Storyboard> storyboards;
  std::vector<ContinuityBook> continuity_books;
  std::vector<BaseSceneSnapshot> bss_list;
  std::vector<FrameSequence> frames;
  std::vector<package::PromptPackage> source_packages;
  std::vector<ContentSegment> segments;

  bool empty() const { return bss_list.empty(); }
  std::int64_t runtime_start() const;
  std::int64_t runtime_end() const;
  // Sum of presentation interval lengths.
  std::int64_t runtime_length() const;
  const package::PromptPackage* source(std::string_view package_id) const;

  bool operator==(const GeneratedContent&) const = default;
};

// Features shown by a frame: visible objects plus background and style when
// those name a feature tag of the content's elements.
std::set<std::string> frame_features(const GeneratedContent& c, const FrameDescriptor& f);

// Union of frame_features over frames with time in [interval.start, interval.end).
std::set<std::string> features_in(const GeneratedContent& c, const ops::Interval& interval);

std::uint64_t content_hash(const GeneratedContent& c);
std::uint64_t frame_sequence_hash(const GeneratedContent& c);

struct BacktrackResult {
  std::size_t bss = 0;
  std::size_t storyboard = 0;
  std::size_t scene_sample = 0;

  bool operator==(const BacktrackResult&) const = default;
};

// Throws Error(kOutOfRange) when t lies outside every presentation interval.
BacktrackResult backtrack(const GeneratedContent& c, std::int64_t t);

// Structural invariants: partition of flags and runtime, 1:1:1 pairing,
// continuity links, frame timing and mandatory feature coverage. Returns a
// description of every violation found.
std::vector<std::string> check_content(const GeneratedContent& c);

}  // namespace pdm::cg

#endif  // PDM_CG_CONTENT_H_
