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

#include "pdm/ops/timeline.h"

#include <algorithm>
#include <set>

#include "pdm/common/error.h"
#include "pdm/ops/merge.h"

namespace pdm::ops {

Timeline plan_timeline(const std::vector<package::PromptPackage>& packages,
                       const Interval& window) {
  std::set<std::string> ids;
  std::set<std::int64_t> points;
  for (const auto& p : packages) {
    if (!ids.insert(p.package_id).second) {
      throw Error(ErrorCode::kDuplicatePackage, "package " + p.package_id + " given twice");
    }
    for (std::int64_t t : {p.schedule.start, p.schedule.end()}) {
      points.insert(std::clamp(t, window.start, window.end));
    }
  }
  std::vector<const package::PromptPackage*> ordered;
  for (const auto& p : packages) ordered.push_back(&p);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto* a, const auto* b) { return schedule_precedes(*a, *b); });

  Timeline timeline;
  for (auto it = points.begin(); it != points.end() && std::next(it) != points.end(); ++it) {
    const std::int64_t a = *it;
    const std::int64_t b = *std::next(it);
    TimeSegment segment;
    segment.interval = {a, b};
    for (const auto* p : ordered) {
      if (p->schedule.start > a || p->schedule.end() < b) continue;
      if (segment.main_id.empty()) {
        segment.main_id = p->package_id;
      } else {
        segment.sub_ids.push_back(p->package_id);
      }
      auto tags = mandatory_features(*p);
      segment.features_present.insert(tags.begin(), tags.end());
    }
    if (!segment.main_id.empty()) timeline.segments.push_back(std::move(segment));
  }
  assign_fade_out(timeline.segments);
  return timeline;
}

void assign_fade_out(std::vector<TimeSegment>& segments) {
  for (std::size_t i = 0; i < segments.size(); ++i) {
    auto& segment = segments[i];
    segment.fade_out.clear();
    const bool adjacent = i + 1 < segments.size() &&
                          segments[i + 1].interval.start == segment.interval.end;
    for (const auto& tag : segment.features_present) {
      if (!adjacent || segments[i + 1].features_present.count(tag) == 0) {
        segment.fade_out.insert(tag);
      }
    }
  }
}

Timeline plan_timeline_m2(const cg::GeneratedContent& active,
                          const std::vector<package::PromptPackage>& arrivals,
                          std::optional<std::int64_t> now) {
  for (std::size_t i = 1; i < arrivals.size(); ++i) {
    if (arrivals[i].schedule.start < arrivals[i - 1].schedule.start) {
      throw Error(ErrorCode::kInvalidArgument, "arrivals must be sorted by schedule start");
    }
  }
  const std::int64_t t = now ? *now
                         : !arrivals.empty() ? arrivals.front().schedule.start
                                             : active.runtime_start();
  std::vector<package::PromptPackage> packages;
  for (const auto& p : arrivals) {
    if (p.schedule.end() <= t) {
      throw Error(ErrorCode::kStaleArrival, "package " + p.package_id + " ended before " + std::to_string(t));
    }
    packages.push_back(p);
  }
  for (const auto& p : active.source_packages) {
    if (p.schedule.end() <= t) continue;
    bool replaced = std::any_of(packages.begin(), packages.end(),
                                [&](const auto& q) { return q.package_id == p.package_id; });
    if (!replaced) packages.push_back(p);
  }
  return plan_timeline(packages, {t, kForever});
}

}  // namespace pdm::ops
