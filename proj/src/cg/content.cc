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

#include "pdm/cg/content.h"

#include <algorithm>

#include "pdm/cg/pipeline.h"
#include "pdm/common/error.h"
#include "pdm/common/hash.h"

namespace pdm::cg {

namespace {

std::set<std::string> element_tags(const GeneratedContent& c) {
  std::set<std::string> tags;
  for (const auto& seg : c.segments) {
    for (const auto& me : seg.merged.elements) {
      if (!me.element.feature_tag.empty()) tags.insert(me.element.feature_tag);
    }
  }
  return tags;
}

std::set<std::string> features_with(const std::set<std::string>& tags, const FrameDescriptor& f) {
  std::set<std::string> out = f.visible_objects;
  if (tags.count(f.background) != 0) out.insert(f.background);
  if (tags.count(f.style) != 0) out.insert(f.style);
  return out;
}

void hash_refs(Fnv1a& h, const std::vector<ops::ElementRef>& refs) {
  h.add_u64(refs.size());
  for (const auto& r : refs) h.add_field(r.package_id).add_field(r.element_id);
}

void hash_frames(Fnv1a& h, const GeneratedContent& c) {
  h.add_u64(c.frames.size());
  for (const auto& seq : c.frames) {
    h.add_u64(seq.bss_index).add_u64(static_cast<std::uint64_t>(seq.fps)).add_u64(seq.frames.size());
    for (const auto& f : seq.frames) {
      h.add_u64(static_cast<std::uint64_t>(f.time)).add_u64(f.visible_objects.size());
      for (const auto& o : f.visible_objects) h.add_field(o);
      h.add_field(f.background).add_field(f.style).add_field(f.motion_note).add_field(f.camera);
    }
  }
}

std::string describe(const char* what, std::size_t index, const std::string& detail) {
  return std::string(what) + " " + std::to_string(index) + ": " + detail;
}

}  // namespace

const PlacedObject* Storyboard::find(std::string_view object_id) const {
  for (const auto& o : objects) {
    if (o.object_id == object_id) return &o;
  }
  return nullptr;
}

std::string_view continuity_action_name(ContinuityAction action) {
  switch (action) {
    case ContinuityAction::kEnters: return "Enters";
    case ContinuityAction::kExits: return "Exits";
    case ContinuityAction::kMoves: return "Moves";
    case ContinuityAction::kPersists: return "Persists";
  }
  return "?";
}

std::int64_t GeneratedContent::runtime_start() const {
  return bss_list.empty() ? 0 : bss_list.front().presentation_interval.start;
}

std::int64_t GeneratedContent::runtime_end() const {
  return bss_list.empty() ? 0 : bss_list.back().presentation_interval.end;
}

std::int64_t GeneratedContent::runtime_length() const {
  std::int64_t total = 0;
  for (const auto& b : bss_list) total += b.presentation_interval.length();
  return total;
}

const package::PromptPackage* GeneratedContent::source(std::string_view package_id) const {
  for (const auto& p : source_packages) {
    if (p.package_id == package_id) return &p;
  }
  return nullptr;
}

std::set<std::string> frame_features(const GeneratedContent& c, const FrameDescriptor& f) {
  return features_with(element_tags(c), f);
}

std::set<std::string> features_in(const GeneratedContent& c, const ops::Interval& interval) {
  const auto tags = element_tags(c);
  std::set<std::string> out;
  for (const auto& seq : c.frames) {
    for (const auto& f : seq.frames) {
      if (!interval.contains(f.time)) continue;
      auto shown = features_with(tags, f);
      out.insert(shown.begin(), shown.end());
    }
  }
  return out;
}

std::uint64_t content_hash(const GeneratedContent& c) {
  Fnv1a h;
  h.add_u64(static_cast<std::uint64_t>(c.mode)).add_u64(c.seed).add_u64(static_cast<std::uint64_t>(c.fps));
  h.add_u64(c.narrative.seed).add_u64(c.narrative.flags.size());
  for (const auto& f : c.narrative.flags) {
    h.add_u64(f.index).add_field(f.text).add_u64(static_cast<std::uint64_t>(f.time_hint));
    hash_refs(h, f.element_refs);
  }
  h.add_u64(c.scene_samples.size());
  for (const auto& s : c.scene_samples) {
    h.add_u64(s.index).add_u64(s.flag_range.first).add_u64(s.flag_range.last);
    h.add_field(s.description).add_u64(static_cast<std::uint64_t>(s.timestamp));
    hash_refs(h, s.element_refs);
  }
  h.add_u64(c.storyboards.size());
  for (const auto& s : c.storyboards) {
    h.add_u64(s.index).add_u64(s.objects.size());
    for (const auto& o : s.objects) {
      h.add_field(o.object_id).add_u64(static_cast<std::uint64_t>(o.position.column));
      h.add_u64(static_cast<std::uint64_t>(o.position.row));
    }
    h.add_field(s.background).add_field(s.style).add_u64(static_cast<std::uint64_t>(s.timestamp));
    hash_refs(h, s.element_refs);
  }
  h.add_u64(c.continuity_books.size());
  for (const auto& b : c.continuity_books) {
    h.add_u64(b.index).add_u64(b.entries.size());
    for (const auto& e : b.entries) {
      h.add_field(e.object_id).add_u64(static_cast<std::uint64_t>(e.action));
      h.add_u64(e.target_position ? 1 : 0);
      if (e.target_position) {
        h.add_u64(static_cast<std::uint64_t>(e.target_position->column));
        h.add_u64(static_cast<std::uint64_t>(e.target_position->row));
      }
      h.add_u64(e.linked_storyboard);
    }
  }
  h.add_u64(c.bss_list.size());
  for (const auto& b : c.bss_list) {
    h.add_u64(b.index).add_field(b.descriptor).add_u64(b.seed);
    h.add_u64(static_cast<std::uint64_t>(b.presentation_interval.start));
    h.add_u64(static_cast<std::uint64_t>(b.presentation_interval.end));
  }
  hash_frames(h, c);
  h.add_u64(c.segments.size());
  for (const auto& seg : c.segments) {
    const auto& t = seg.timeline;
    h.add_u64(static_cast<std::uint64_t>(t.interval.start)).add_u64(static_cast<std::uint64_t>(t.interval.end));
    h.add_field(t.main_id).add_u64(t.sub_ids.size());
    for (const auto& s : t.sub_ids) h.add_field(s);
    h.add_u64(t.features_present.size());
    for (const auto& s : t.features_present) h.add_field(s);
    h.add_u64(t.fade_out.size());
    for (const auto& s : t.fade_out) h.add_field(s);
    h.add_u64(seg.first_sample).add_u64(seg.sample_count).add_u64(seg.merged.elements.size());
    for (const auto& me : seg.merged.elements) {
      h.add_field(me.origin_package_id).add_field(me.element.element_id).add_field(me.element.feature_tag);
    }
  }
  return h.digest();
}

std::uint64_t frame_sequence_hash(const GeneratedContent& c) {
  Fnv1a h;
  hash_frames(h, c);
  return h.digest();
}

BacktrackResult backtrack(const GeneratedContent& c, std::int64_t t) {
  auto it = std::upper_bound(c.bss_list.begin(), c.bss_list.end(), t,
                             [](std::int64_t value, const BaseSceneSnapshot& b) {
                               return value < b.presentation_interval.start;
                             });
  if (it == c.bss_list.begin() || !std::prev(it)->presentation_interval.contains(t)) {
    throw Error(ErrorCode::kOutOfRange, "time " + std::to_string(t) + " is outside the content runtime");
  }
  std::size_t index = static_cast<std::size_t>(std::prev(it) - c.bss_list.begin());
  return {index, c.storyboards[index].index, c.scene_samples[index].index};
}

std::vector<std::string> check_content(const GeneratedContent& c) {
  std::vector<std::string> problems;
  auto fail = [&](std::string message) { problems.push_back(std::move(message)); };

  const std::size_t n = c.scene_samples.size();
  if (c.storyboards.size() != n || c.continuity_books.size() != n || c.bss_list.size() != n ||
      c.frames.size() != n) {
    fail("pairing: samples, storyboards, books, snapshots and frame sequences differ in count");
    return problems;
  }
  if (n == 0) {
    if (!c.narrative.flags.empty()) fail("narrative: flags without scene samples");
    return problems;
  }

  const auto& flags = c.narrative.flags;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i].index != i) fail(describe("flag", i, "index out of sequence"));
    if (i > 0 && flags[i].time_hint < flags[i - 1].time_hint) {
      fail(describe("flag", i, "time hint decreases"));
    }
  }

  std::size_t next_flag = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& s = c.scene_samples[k];
    if (s.index != k) fail(describe("sample", k, "index out of sequence"));
    if (s.flag_range.first != next_flag || s.flag_range.last < s.flag_range.first) {
      fail(describe("sample", k, "flag range does not continue the partition"));
    }
    next_flag = s.flag_range.last + 1;
    if (k > 0 && s.timestamp <= c.scene_samples[k - 1].timestamp) {
      fail(describe("sample", k, "timestamp not increasing"));
    }
  }
  if (next_flag != flags.size()) fail("samples: flag ranges do not cover the narrative");

  for (std::size_t k = 0; k < n; ++k) {
    const auto& s = c.storyboards[k];
    if (s.index != k) fail(describe("storyboard", k, "index out of sequence"));
    for (std::size_t i = 0; i < s.objects.size(); ++i) {
      if (!s.objects[i].position.valid()) fail(describe("storyboard", k, "position off grid"));
      if (i > 0 && !(s.objects[i - 1].object_id < s.objects[i].object_id)) {
        fail(describe("storyboard", k, "objects not sorted and unique"));
      }
    }
  }

  auto adjacent = [&](std::size_t k) {
    return k + 1 < n && c.bss_list[k].presentation_interval.end ==
                            c.bss_list[k + 1].presentation_interval.start;
  };
  for (std::size_t k = 0; k < n; ++k) {
    const auto& book = c.continuity_books[k];
    if (book.index != k) fail(describe("book", k, "index out of sequence"));
    for (const auto& e : book.entries) {
      if (e.linked_storyboard != k && e.linked_storyboard != k + 1) {
        fail(describe("book", k, "links beyond the next storyboard"));
        continue;
      }
      if (e.linked_storyboard == k + 1) {
        const PlacedObject* target = adjacent(k) ? c.storyboards[k + 1].find(e.object_id) : nullptr;
        if (target == nullptr) {
          fail(describe("book", k, e.object_id + " linked forward but absent"));
        } else if (e.target_position && *e.target_position != target->position) {
          fail(describe("book", k, e.object_id + " target differs from the next storyboard"));
        }
      }
    }
    if (adjacent(k)) {
      for (const auto& o : c.storyboards[k + 1].objects) {
        if (c.storyboards[k].find(o.object_id) != nullptr) continue;
        bool found = std::any_of(book.entries.begin(), book.entries.end(), [&](const ContinuityEntry& e) {
          return e.object_id == o.object_id && e.action == ContinuityAction::kEnters &&
                 e.linked_storyboard == k + 1 && e.target_position == o.position;
        });
        if (!found) fail(describe("book", k, "missing Enters entry for " + o.object_id));
      }
    }
  }

  for (std::size_t k = 0; k < n; ++k) {
    const auto& b = c.bss_list[k];
    const auto& iv = b.presentation_interval;
    if (b.index != k) fail(describe("snapshot", k, "index out of sequence"));
    if (iv.length() <= 0) fail(describe("snapshot", k, "empty presentation interval"));
    if (iv.start != c.scene_samples[k].timestamp) {
      fail(describe("snapshot", k, "interval does not start at the sample timestamp"));
    }
    if (k > 0 && iv.start < c.bss_list[k - 1].presentation_interval.end) {
      fail(describe("snapshot", k, "overlaps its predecessor"));
    }
    if (b.descriptor != scene_descriptor(c.storyboards[k], b.seed)) {
      fail(describe("snapshot", k, "descriptor does not match its storyboard"));
    }
  }

  // Segments tile the runtime: each one is covered exactly by its snapshots.
  std::size_t next_sample = 0;
  for (std::size_t i = 0; i < c.segments.size(); ++i) {
    const auto& seg = c.segments[i];
    if (seg.first_sample != next_sample || seg.sample_count == 0 ||
        seg.first_sample + seg.sample_count > n) {
      fail(describe("segment", i, "sample range does not continue the partition"));
      break;
    }
    next_sample = seg.first_sample + seg.sample_count;
    const auto& iv = seg.timeline.interval;
    std::int64_t cursor = iv.start;
    for (std::size_t k = seg.first_sample; k < next_sample; ++k) {
      const auto& biv = c.bss_list[k].presentation_interval;
      if (biv.start != cursor) fail(describe("segment", i, "snapshots leave a gap"));
      cursor = biv.end;
    }
    if (cursor != iv.end) fail(describe("segment", i, "snapshots do not reach the segment end"));
  }
  if (next_sample != n) fail("segments: snapshots outside every segment");

  const auto tags = element_tags(c);
  std::set<std::string> shown;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& seq = c.frames[k];
    const auto& iv = c.bss_list[k].presentation_interval;
    if (seq.bss_index != k) fail(describe("frames", k, "snapshot index mismatch"));
    if (seq.fps != c.fps) fail(describe("frames", k, "frame rate differs from the content"));
    const std::size_t count = static_cast<std::size_t>(iv.length() * c.fps / 1000);
    if (seq.frames.size() != count) fail(describe("frames", k, "unexpected frame count"));

    std::set<std::string> allowed;
    for (const auto& o : c.storyboards[k].objects) allowed.insert(o.object_id);
    std::set<std::string> entering;
    for (const auto& e : c.continuity_books[k].entries) {
      if (e.action == ContinuityAction::kEnters) entering.insert(e.object_id);
    }
    const std::size_t tail_from = seq.frames.size() - entering_tail(seq.frames.size());
    for (std::size_t i = 0; i < seq.frames.size(); ++i) {
      const auto& f = seq.frames[i];
      if (f.time != iv.start + static_cast<std::int64_t>(i) * 1000 / c.fps || !iv.contains(f.time)) {
        fail(describe("frames", k, "frame time off the grid"));
      }
      for (const auto& o : f.visible_objects) {
        if (allowed.count(o) == 0 && entering.count(o) == 0) {
          fail(describe("frames", k, o + " visible without sanction"));
        }
      }
      if (i >= tail_from) {
        for (const auto& o : entering) {
          if (f.visible_objects.count(o) == 0 || f.motion_note != "entering") {
            fail(describe("frames", k, o + " not entering in the tail"));
          }
        }
      }
      auto features = features_with(tags, f);
      shown.insert(features.begin(), features.end());
    }
  }

  // A segment cut short before any of its own scenes played presents nothing
  // of its packages; a bridge scene only carries earlier objects.
  for (const auto& seg : c.segments) {
    const auto& iv = seg.timeline.interval;
    bool presented = false;
    const std::size_t own_from = seg.first_sample + (seg.bridged ? 1 : 0);
    for (std::size_t k = own_from; k < seg.first_sample + seg.sample_count && k < c.frames.size(); ++k) {
      presented = presented || !c.frames[k].frames.empty();
    }
    if (!presented) continue;
    const auto in_segment = features_in(c, iv);
    for (const auto& me : seg.merged.elements) {
      const auto& e = me.element;
      if (!e.mandatory || e.feature_tag.empty()) continue;
      if (me.origin_package_id == seg.merged.main_package_id) {
        if (in_segment.count(e.feature_tag) == 0) {
          fail(describe("coverage", seg.first_sample, "main feature " + e.feature_tag + " not shown in its segment"));
        }
      } else if (shown.count(e.feature_tag) == 0) {
        fail("coverage: mandatory feature " + e.feature_tag + " never shown");
      }
    }
  }
  return problems;
}

}  // namespace pdm::cg
