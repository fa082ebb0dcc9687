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

#include "pdm/cg/generate.h"

#include <algorithm>
#include <limits>
#include <map>

#include "pdm/cg/pipeline.h"
#include "pdm/common/error.h"
#include "pdm/common/hash.h"
#include "pdm/ops/execute.h"
#include "pdm/ops/merge.h"
#include "pdm/ops/timeline.h"

namespace pdm::cg {

void append_segment(GeneratedContent& c, const ops::MergedPackage& merged,
                    const ops::TimeSegment& segment, const GenerateOptions& options,
                    bool bridge) {
  const ops::Interval& window = segment.interval;
  if (window.length() <= 0) throw Error(ErrorCode::kInvalidArgument, "empty segment window");
  ops::MergedPackage m = merged;
  m.schedule = {window.start, window.length()};

  const std::uint64_t index = c.segments.size();
  const std::vector<std::string> ids = m.package_ids();
  const std::uint64_t narrative_seed = stage_seed(c.seed, "narrative", ids, index);
  Narrative narrative = generate_narrative(m, narrative_seed, c.narrative.flags.size());
  if (c.narrative.flags.empty()) c.narrative.seed = narrative_seed;

  const bool continues = bridge && !c.bss_list.empty() &&
                         c.bss_list.back().presentation_interval.end == window.start;
  const std::size_t cap = max_samples_for(window, options.fps);
  auto samples = sample_scenes(narrative, options.density, window, cap, c.scene_samples.size());
  const std::size_t flags = narrative.flags.size();
  if (continues && samples.size() < 2 && std::min(flags, cap) >= 2) {
    samples = sample_scenes(narrative, 2.0 / static_cast<double>(flags), window, cap,
                            c.scene_samples.size());
  }

  StoryboardOptions board_options;
  if (continues && samples.size() >= 2) {
    board_options.use_bridge = true;
    board_options.bridge = c.storyboards.back().objects;
  }
  auto boards = build_storyboards(samples, m, stage_seed(c.seed, "storyboard", ids, index),
                                  board_options)
                    .first;
  const auto intervals = presentation_intervals(samples, window);
  const std::uint64_t bss_seed = stage_seed(c.seed, "bss", ids, index);

  ContentSegment record;
  record.timeline = segment;
  record.merged = m;
  record.first_sample = c.scene_samples.size();
  record.sample_count = samples.size();
  record.bridged = board_options.use_bridge;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    c.bss_list.push_back(render_bss(boards[k], intervals[k], mix64(bss_seed + k)));
  }
  for (auto& f : narrative.flags) c.narrative.flags.push_back(std::move(f));
  for (auto& s : samples) c.scene_samples.push_back(std::move(s));
  for (auto& b : boards) c.storyboards.push_back(std::move(b));
  c.segments.push_back(std::move(record));
}

void finalize_content(GeneratedContent& c) {
  // Books only link storyboards whose snapshots are adjacent in time; a gap
  // in reception closes the run.
  c.continuity_books.clear();
  std::size_t run = 0;
  for (std::size_t k = 0; k < c.bss_list.size(); ++k) {
    const bool closes = k + 1 == c.bss_list.size() ||
                        c.bss_list[k].presentation_interval.end !=
                            c.bss_list[k + 1].presentation_interval.start;
    if (!closes) continue;
    std::vector<Storyboard> boards(c.storyboards.begin() + static_cast<std::ptrdiff_t>(run),
                                   c.storyboards.begin() + static_cast<std::ptrdiff_t>(k + 1));
    for (auto& book : build_continuity_books(boards)) c.continuity_books.push_back(std::move(book));
    run = k + 1;
  }
  c.frames.clear();
  for (std::size_t k = 0; k < c.bss_list.size(); ++k) {
    c.frames.push_back(compose_frames(c.bss_list[k], c.storyboards[k], c.continuity_books[k], c.fps));
  }
}

GeneratedContent generate_content(const std::vector<package::PromptPackage>& packages,
                                  ops::OperationMode mode, std::uint64_t seed,
                                  const GenerateOptions& options) {
  if (packages.empty()) throw Error(ErrorCode::kEmptyInput, "no prompt packages");
  if (options.fps <= 0) throw Error(ErrorCode::kInvalidArgument, "fps must be positive");

  if (mode == ops::OperationMode::kMultiAsync) {
    std::map<std::int64_t, ops::Event> by_start;
    for (const auto& p : packages) {
      auto& event = by_start[p.schedule.start];
      event.time = p.schedule.start;
      event.arrivals.push_back(p);
    }
    std::vector<ops::Event> events;
    for (auto& [start, event] : by_start) events.push_back(std::move(event));
    return ops::execute(events, mode, seed, options);
  }
  if (mode == ops::OperationMode::kSingleSource && packages.size() != 1) {
    throw Error(ErrorCode::kModeMismatch, "single-source operation takes exactly one package");
  }

  ops::MergePolicy policy;
  policy.k = mode == ops::OperationMode::kSingleSource ? std::numeric_limits<std::size_t>::max()
                                                       : options.k;
  ops::MergedPackage merged = ops::merge_m1(packages, policy);

  ops::TimeSegment segment;
  segment.interval = {merged.schedule.start, merged.schedule.end()};
  segment.main_id = merged.main_package_id;
  segment.sub_ids = merged.sub_package_ids;
  for (const auto& p : packages) {
    auto tags = ops::mandatory_features(p);
    segment.features_present.insert(tags.begin(), tags.end());
  }
  segment.fade_out = segment.features_present;

  GeneratedContent c;
  c.mode = mode;
  c.seed = seed;
  c.fps = options.fps;
  for (const auto& p : packages) c.source_packages.push_back(package::canonical(p));
  std::sort(c.source_packages.begin(), c.source_packages.end(),
            [](const auto& a, const auto& b) { return a.package_id < b.package_id; });
  append_segment(c, merged, segment, options, false);
  finalize_content(c);
  return c;
}

}  // namespace pdm::cg
