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

#include "pdm/ops/execute.h"

#include <algorithm>
#include <map>

#include "pdm/common/error.h"
#include "pdm/ops/merge.h"
#include "pdm/ops/residual.h"
#include "pdm/ops/timeline.h"

namespace pdm::ops {

namespace {

void check_valid(const package::PromptPackage& p) {
  auto report = package::validate_package(p);
  if (!report.ok()) {
    throw Error(ErrorCode::kValidation, "package " + p.package_id + ":\n" + report.render());
  }
}

void upsert(std::vector<package::PromptPackage>& list, const package::PromptPackage& p) {
  for (auto& q : list) {
    if (q.package_id == p.package_id) {
      q = p;
      return;
    }
  }
  list.push_back(p);
}

void truncate_schedule(package::PromptPackage& p, std::int64_t t) {
  if (p.schedule.end() > t) p.schedule.duration = std::max<std::int64_t>(0, t - p.schedule.start);
}

cg::GeneratedContent execute_async(const std::vector<Event>& events, std::uint64_t seed,
                                   const cg::GenerateOptions& options) {
  cg::GeneratedContent c;
  c.mode = OperationMode::kMultiAsync;
  c.seed = seed;
  c.fps = options.fps;
  // Packages currently known to the terminal, with schedules shortened by
  // departures.
  std::vector<package::PromptPackage> known;

  for (const auto& event : events) {
    const std::int64_t t = event.time;
    for (const auto& id : event.departures) {
      for (auto& p : known) {
        if (p.package_id == id) truncate_schedule(p, t);
      }
      for (auto& p : c.source_packages) {
        if (p.package_id == id) truncate_schedule(p, t);
      }
    }
    std::erase_if(known, [&](const auto& p) { return p.schedule.end() <= t; });
    for (const auto& arrival : event.arrivals) {
      check_valid(arrival);
      if (arrival.schedule.end() <= t) {
        throw Error(ErrorCode::kStaleArrival,
                    "package " + arrival.package_id + " ended before " + std::to_string(t));
      }
      bool active = std::any_of(known.begin(), known.end(),
                                [&](const auto& p) { return p.package_id == arrival.package_id; });
      if (!active) known.push_back(package::canonical(arrival));
    }

    std::map<std::string, package::PromptPackage> carried;
    if (!c.empty() && t < c.runtime_end()) {
      for (auto& p : residual_packages(residual(c, t), c)) carried.emplace(p.package_id, std::move(p));
    }
    cut_content(c, t);
    if (known.empty()) continue;

    Timeline plan = plan_timeline(known, {t, kForever});
    for (const auto& segment : plan.segments) {
      std::vector<package::PromptPackage> inputs;
      std::vector<std::string> members = segment.sub_ids;
      members.push_back(segment.main_id);
      for (const auto& id : members) {
        auto it = std::find_if(known.begin(), known.end(),
                               [&](const auto& p) { return p.package_id == id; });
        auto held = carried.find(id);
        if (held != carried.end() && it->schedule.start < t) {
          auto p = held->second;
          p.schedule = {t, it->schedule.end() - t};
          inputs.push_back(std::move(p));
        } else {
          inputs.push_back(*it);
        }
      }
      MergePolicy policy{options.k, segment.main_id};
      MergedPackage merged = merge_m1(inputs, policy);
      cg::append_segment(c, merged, segment, options, true);
    }
    for (const auto& p : known) upsert(c.source_packages, p);
  }

  std::sort(c.source_packages.begin(), c.source_packages.end(),
            [](const auto& a, const auto& b) { return a.package_id < b.package_id; });
  std::vector<TimeSegment> timeline;
  for (const auto& seg : c.segments) timeline.push_back(seg.timeline);
  assign_fade_out(timeline);
  for (std::size_t i = 0; i < timeline.size(); ++i) c.segments[i].timeline = timeline[i];
  cg::finalize_content(c);
  return c;
}

}  // namespace

void cut_content(cg::GeneratedContent& c, std::int64_t t) {
  c.continuity_books.clear();
  c.frames.clear();
  std::size_t keep = 0;
  while (keep < c.bss_list.size() && c.bss_list[keep].presentation_interval.start < t) ++keep;
  if (keep == 0) {
    c.narrative.flags.clear();
    c.scene_samples.clear();
    c.storyboards.clear();
    c.bss_list.clear();
    c.segments.clear();
    return;
  }
  c.scene_samples.resize(keep);
  c.storyboards.resize(keep);
  c.bss_list.resize(keep);
  auto& last = c.bss_list.back().presentation_interval;
  last.end = std::min(last.end, t);
  c.narrative.flags.resize(c.scene_samples.back().flag_range.last + 1);
  for (auto& f : c.narrative.flags) f.time_hint = std::min(f.time_hint, t);
  std::erase_if(c.segments, [&](const cg::ContentSegment& s) { return s.first_sample >= keep; });
  auto& segment = c.segments.back();
  segment.sample_count = keep - segment.first_sample;
  segment.timeline.interval.end = last.end;
}

cg::GeneratedContent execute(const std::vector<Event>& events, OperationMode mode,
                             std::uint64_t seed, const cg::GenerateOptions& options) {
  for (std::size_t i = 1; i < events.size(); ++i) {
    if (events[i].time < events[i - 1].time) {
      throw Error(ErrorCode::kInvalidArgument, "events must be time ordered");
    }
  }
  if (mode == OperationMode::kMultiAsync) return execute_async(events, seed, options);

  std::vector<package::PromptPackage> packages;
  for (const auto& e : events) {
    if (!e.departures.empty() || (!e.arrivals.empty() && e.time != events.front().time)) {
      throw Error(ErrorCode::kModeMismatch, "synchronous operation takes one arrival event");
    }
    packages.insert(packages.end(), e.arrivals.begin(), e.arrivals.end());
  }
  if (mode == OperationMode::kSingleSource && packages.size() != 1) {
    throw Error(ErrorCode::kModeMismatch, "single-source operation takes exactly one package");
  }
  return cg::generate_content(packages, mode, seed, options);
}

}  // namespace pdm::ops
