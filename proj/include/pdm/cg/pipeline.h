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

#ifndef PDM_CG_PIPELINE_H_
#define PDM_CG_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "pdm/cg/content.h"
#include "pdm/ops/types.h"

namespace pdm::cg {

// Every flag cites the mandatory elements plus one further element taken
// from a seeded rotation, so each element is cited at least once. Flag
// indices start at first_index; time hints spread over m.schedule.
//
// Throws Error(kEmptyInput) when m has no elements.
Narrative generate_narrative(const ops::MergedPackage& m, std::uint64_t seed,
                             std::size_t first_index = 0);

// Partitions the flags into max(1, round(density * flags)) contiguous
// groups, at most max_samples of them, with timestamps spread uniformly over
// window. Sample indices start at first_index.
//
// Throws Error(kInvalidArgument) when density <= 0.
std::vector<SceneSample> sample_scenes(
    const Narrative& n, double density, const ops::Interval& window,
    std::size_t max_samples = std::numeric_limits<std::size_t>::max(),
    std::size_t first_index = 0);

// Upper bound on scene samples for a window so every snapshot gets at least
// one frame.
std::size_t max_samples_for(const ops::Interval& window, int fps);

struct StoryboardOptions {
  // When set, the first storyboard only holds these objects (restricted to
  // the objects of m) at their given positions; new objects appear from the
  // second storyboard on.
  std::vector<PlacedObject> bridge;
  bool use_bridge = false;
};

std::pair<std::vector<Storyboard>, std::vector<ContinuityBook>> build_storyboards(
    const std::vector<SceneSample>& samples, const ops::MergedPackage& m, std::uint64_t seed,
    const StoryboardOptions& options = {});

// Book n pairs storyboard n with storyboard n+1; the last book only holds
// Persists entries.
std::vector<ContinuityBook> build_continuity_books(const std::vector<Storyboard>& storyboards);

// Presentation intervals [timestamp_k, timestamp_{k+1}) with the last one
// closed by window.end.
std::vector<ops::Interval> presentation_intervals(const std::vector<SceneSample>& samples,
                                                  const ops::Interval& window);

std::string scene_descriptor(const Storyboard& s, std::uint64_t seed);

BaseSceneSnapshot render_bss(const Storyboard& s, const ops::Interval& interval,
                             std::uint64_t seed);

// Frame count is floor(length * fps / 1000). Objects entering the next
// storyboard are visible in the final ceil(20%) of the frames.
//
// Throws Error(kInvalidArgument) when fps <= 0.
FrameSequence compose_frames(const BaseSceneSnapshot& b, const Storyboard& s,
                             const ContinuityBook& book, int fps);

std::size_t entering_tail(std::size_t frame_count);

}  // namespace pdm::cg

#endif  // PDM_CG_PIPELINE_H_
