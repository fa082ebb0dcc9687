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

#include "pdm/ops/residual.h"

#include <algorithm>
#include <map>
#include <set>

#include "pdm/common/error.h"

namespace pdm::ops {

ResidualPackage residual(const cg::GeneratedContent& c, std::int64_t t_cut) {
  if (c.empty() || t_cut >= c.runtime_end()) {
    throw Error(ErrorCode::kNothingRemaining,
                "nothing remains after " + std::to_string(t_cut));
  }
  ResidualPackage r;
  r.cut_time = t_cut;
  std::set<ElementRef> refs;
  for (std::size_t k = 0; k < c.bss_list.size(); ++k) {
    if (c.bss_list[k].presentation_interval.end <= t_cut) continue;
    const auto& sample = c.scene_samples[k];
    if (r.remaining_scene_samples.empty()) {
      for (const auto& seg : c.segments) {
        if (k >= seg.first_sample && k < seg.first_sample + seg.sample_count) {
          r.origin_package_id = seg.merged.main_package_id;
        }
      }
    }
    r.remaining_scene_samples.push_back(sample);
    for (std::size_t l = sample.flag_range.first; l <= sample.flag_range.last; ++l) {
      const auto& flag = c.narrative.flags[l];
      r.remaining_flags.push_back(flag);
      refs.insert(flag.element_refs.begin(), flag.element_refs.end());
    }
  }
  for (const auto& seg : c.segments) {
    for (const auto& me : seg.merged.elements) {
      if (refs.erase(me.ref()) != 0) r.remaining_elements.push_back(me);
    }
  }
  return r;
}

std::vector<package::PromptPackage> residual_packages(const ResidualPackage& r,
                                                      const cg::GeneratedContent& c) {
  std::map<std::string, package::PromptPackage> by_origin;
  for (const auto& me : r.remaining_elements) {
    const auto* source = c.source(me.origin_package_id);
    if (source == nullptr || source->schedule.end() <= r.cut_time) continue;
    auto [it, fresh] = by_origin.try_emplace(me.origin_package_id);
    auto& p = it->second;
    if (fresh) {
      p.package_id = source->package_id;
      p.provider_id = source->provider_id;
      p.version = source->version;
      p.schedule = {r.cut_time, source->schedule.end() - r.cut_time};
      for (const auto& e : source->elements) {
        if (e.mandatory) p.elements.push_back(e);
      }
    }
    if (p.find(me.element.element_id) == nullptr) p.elements.push_back(me.element);
  }
  std::vector<package::PromptPackage> out;
  for (auto& [id, p] : by_origin) out.push_back(package::canonical(std::move(p)));
  return out;
}

}  // namespace pdm::ops
