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

#include "pdm/cg/pipeline.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string_view>

#include "pdm/common/error.h"
#include "pdm/common/hash.h"

namespace pdm::cg {

namespace {

constexpr std::array<std::string_view, 4> kMiddleBeats = {
    "Development beat", "Encounter beat", "Turning beat", "Build-up beat"};

constexpr std::array<std::string_view, 6> kBackgroundPalette = {
    "dusk skyline", "studio white", "forest clearing", "city street", "seaside promenade",
    "night market"};

constexpr std::array<std::string_view, 5> kStylePalette = {
    "cinematic", "documentary", "pastel animation", "film noir", "vivid pop"};

constexpr std::array<std::string_view, 7> kCameraMoves = {
    "static", "pan-left", "pan-right", "tilt", "zoom-in", "zoom-out", "dolly"};

std::string element_label(const package::ServiceElement& e) {
  return e.feature_tag.empty() ? e.element_id : e.feature_tag;
}

bool is_object_element(const package::ServiceElement& e) {
  return !e.feature_tag.empty() && !ops::is_exclusive_role(e.role);
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

GridPosition random_position(std::mt19937_64& rng) {
  GridPosition p;
  p.column = static_cast<int>(pick(rng, kGridColumns));
  p.row = static_cast<int>(pick(rng, kGridRows));
  return p;
}

// Background or style taken from the merged role element, if any.
std::string role_look(const ops::MergedPackage& m, std::string_view role) {
  for (const auto& me : m.elements) {
    const auto& e = me.element;
    if (e.role != role) continue;
    if (!e.feature_tag.empty()) return e.feature_tag;
    const Bytes* b = e.bytes();
    const bool readable = e.modality == package::Modality::kText && b != nullptr && !b->empty() &&
                          std::all_of(b->begin(), b->end(), [](std::uint8_t c) { return c >= 0x20 && c < 0x7f; });
    return readable ? std::string(as_text(*b)) : e.element_id;
  }
  return {};
}

std::vector<ops::ElementRef> sorted_unique(std::vector<ops::ElementRef> refs) {
  std::sort(refs.begin(), refs.end());
  refs.erase(std::unique(refs.begin(), refs.end()), refs.end());
  return refs;
}

}  // namespace

Narrative generate_narrative(const ops::MergedPackage& m, std::uint64_t seed,
                             std::size_t first_index) {
  if (m.elements.empty()) {
    throw Error(ErrorCode::kEmptyInput, "merged package has no elements");
  }
  std::mt19937_64 rng(seed);
  std::vector<ops::ElementRef> anchors;
  std::vector<ops::ElementRef> rotation;
  for (const auto& me : m.elements) {
    if (me.element.mandatory) anchors.push_back(me.ref());
    rotation.push_back(me.ref());
  }
  for (std::size_t i = rotation.size(); i > 1; --i) {
    std::swap(rotation[i - 1], rotation[pick(rng, i)]);
  }

  const std::size_t count = std::max<std::size_t>(3, m.elements.size());
  const std::int64_t start = m.schedule.start;
  const std::int64_t duration = m.schedule.duration;
  Narrative n;
  n.seed = seed;
  for (std::size_t l = 0; l < count; ++l) {
    NarrativeFlag flag;
    flag.index = first_index + l;
    flag.element_refs = anchors;
    const ops::ElementRef& extra = rotation[l % rotation.size()];
    if (std::find(anchors.begin(), anchors.end(), extra) == anchors.end()) {
      flag.element_refs.push_back(extra);
    }
    std::string_view beat = l == 0           ? "Opening beat"
                            : l + 1 == count ? "Closing beat"
                                             : kMiddleBeats[pick(rng, kMiddleBeats.size())];
    flag.text = std::string(beat) + " featuring ";
    for (std::size_t i = 0; i < flag.element_refs.size(); ++i) {
      if (i > 0) flag.text += ", ";
      flag.text += element_label(m.find(flag.element_refs[i])->element);
    }
    flag.time_hint = start + static_cast<std::int64_t>(l) * duration /
                                 static_cast<std::int64_t>(count);
    n.flags.push_back(std::move(flag));
  }
  return n;
}

std::size_t max_samples_for(const ops::Interval& window, int fps) {
  std::int64_t cap = window.length() * fps / 2000;
  return static_cast<std::size_t>(std::max<std::int64_t>(1, cap));
}

std::vector<SceneSample> sample_scenes(const Narrative& n, double density,
                                       const ops::Interval& window, std::size_t max_samples,
                                       std::size_t first_index) {
  if (!(density > 0)) throw Error(ErrorCode::kInvalidArgument, "density must be positive");
  const std::size_t flags = n.flags.size();
  if (flags == 0) return {};
  std::size_t count = static_cast<std::size_t>(
      std::max<long long>(1, std::llround(density * static_cast<double>(flags))));
  count = std::min({count, flags, std::max<std::size_t>(1, max_samples)});

  std::vector<SceneSample> samples;
  const auto duration = window.length();
  for (std::size_t k = 0; k < count; ++k) {
    SceneSample s;
    s.index = first_index + k;
    std::size_t lo = k * flags / count;
    std::size_t hi = (k + 1) * flags / count - 1;
    s.flag_range = {n.flags[lo].index, n.flags[hi].index};
    s.description = "Scene " + std::to_string(s.index) + ": ";
    for (std::size_t l = lo; l <= hi; ++l) {
      if (l > lo) s.description += " / ";
      s.description += n.flags[l].text;
      s.element_refs.insert(s.element_refs.end(), n.flags[l].element_refs.begin(),
                            n.flags[l].element_refs.end());
    }
    s.element_refs = sorted_unique(std::move(s.element_refs));
    s.timestamp = window.start + static_cast<std::int64_t>(k) * duration /
                                     static_cast<std::int64_t>(count);
    samples.push_back(std::move(s));
  }
  return samples;
}

std::pair<std::vector<Storyboard>, std::vector<ContinuityBook>> build_storyboards(
    const std::vector<SceneSample>& samples, const ops::MergedPackage& m, std::uint64_t seed,
    const StoryboardOptions& options) {
  std::mt19937_64 rng(seed);
  std::string background = role_look(m, package::kRoleBackground);
  if (background.empty()) background = kBackgroundPalette[pick(rng, kBackgroundPalette.size())];
  std::string style = role_look(m, package::kRoleStyle);
  if (style.empty()) style = kStylePalette[pick(rng, kStylePalette.size())];

  std::set<std::string> segment_objects;
  for (const auto& me : m.elements) {
    if (is_object_element(me.element)) segment_objects.insert(me.element.feature_tag);
  }

  std::vector<Storyboard> boards;
  std::vector<PlacedObject> previous;
  bool bridge = options.use_bridge;
  if (bridge) {
    for (const auto& o : options.bridge) {
      if (segment_objects.count(o.object_id) != 0) previous.push_back(o);
    }
  }
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const SceneSample& sample = samples[k];
    Storyboard s;
    s.index = sample.index;
    s.background = background;
    s.style = style;
    s.element_refs = sample.element_refs;
    s.timestamp = sample.timestamp;
    if (k == 0 && bridge) {
      s.objects = previous;
    } else {
      std::set<std::string> ids;
      for (const auto& ref : sample.element_refs) {
        const ops::MergedElement* me = m.find(ref);
        if (me != nullptr && is_object_element(me->element)) ids.insert(me->element.feature_tag);
      }
      for (const auto& id : ids) {
        auto it = std::find_if(previous.begin(), previous.end(),
                               [&](const PlacedObject& o) { return o.object_id == id; });
        PlacedObject placed{id, {}};
        if (it != previous.end() && pick(rng, 3) != 0) {
          placed.position = it->position;
        } else {
          placed.position = random_position(rng);
        }
        s.objects.push_back(std::move(placed));
      }
    }
    std::sort(s.objects.begin(), s.objects.end(),
              [](const PlacedObject& a, const PlacedObject& b) { return a.object_id < b.object_id; });
    previous = s.objects;
    boards.push_back(std::move(s));
  }
  auto books = build_continuity_books(boards);
  return {std::move(boards), std::move(books)};
}

std::vector<ContinuityBook> build_continuity_books(const std::vector<Storyboard>& storyboards) {
  std::vector<ContinuityBook> books;
  for (std::size_t n = 0; n < storyboards.size(); ++n) {
    const Storyboard& current = storyboards[n];
    ContinuityBook book;
    book.index = current.index;
    if (n + 1 == storyboards.size()) {
      for (const auto& o : current.objects) {
        book.entries.push_back({o.object_id, ContinuityAction::kPersists, std::nullopt, current.index});
      }
      books.push_back(std::move(book));
      continue;
    }
    const Storyboard& next = storyboards[n + 1];
    for (const auto& o : current.objects) {
      const PlacedObject* later = next.find(o.object_id);
      if (later == nullptr) {
        book.entries.push_back({o.object_id, ContinuityAction::kExits, std::nullopt, current.index});
      } else if (later->position == o.position) {
        book.entries.push_back({o.object_id, ContinuityAction::kPersists, later->position, next.index});
      } else {
        book.entries.push_back({o.object_id, ContinuityAction::kMoves, later->position, next.index});
      }
    }
    for (const auto& o : next.objects) {
      if (current.find(o.object_id) == nullptr) {
        book.entries.push_back({o.object_id, ContinuityAction::kEnters, o.position, next.index});
      }
    }
    std::sort(book.entries.begin(), book.entries.end(),
              [](const ContinuityEntry& a, const ContinuityEntry& b) { return a.object_id < b.object_id; });
    books.push_back(std::move(book));
  }
  return books;
}

std::vector<ops::Interval> presentation_intervals(const std::vector<SceneSample>& samples,
                                                  const ops::Interval& window) {
  std::vector<ops::Interval> out;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    std::int64_t end = k + 1 < samples.size() ? samples[k + 1].timestamp : window.end;
    out.push_back({samples[k].timestamp, end});
  }
  return out;
}

std::string scene_descriptor(const Storyboard& s, std::uint64_t seed) {
  Fnv1a h;
  h.add_u64(s.objects.size());
  for (const auto& o : s.objects) {
    h.add_field(o.object_id);
    h.add_u64(static_cast<std::uint64_t>(o.position.column));
    h.add_u64(static_cast<std::uint64_t>(o.position.row));
  }
  h.add_field(s.background).add_field(s.style).add_u64(seed);
  return hex64(h.digest());
}

BaseSceneSnapshot render_bss(const Storyboard& s, const ops::Interval& interval,
                             std::uint64_t seed) {
  BaseSceneSnapshot b;
  b.index = s.index;
  b.descriptor = scene_descriptor(s, seed);
  b.presentation_interval = interval;
  b.seed = seed;
  return b;
}

std::size_t entering_tail(std::size_t frame_count) { return (frame_count + 4) / 5; }

FrameSequence compose_frames(const BaseSceneSnapshot& b, const Storyboard& s,
                             const ContinuityBook& book, int fps) {
  if (fps <= 0) throw Error(ErrorCode::kInvalidArgument, "fps must be positive");
  FrameSequence seq;
  seq.bss_index = b.index;
  seq.fps = fps;

  std::set<std::string> base;
  for (const auto& o : s.objects) base.insert(o.object_id);
  std::set<std::string> entering;
  bool moves = false;
  bool exits = false;
  for (const auto& e : book.entries) {
    if (e.action == ContinuityAction::kEnters) entering.insert(e.object_id);
    if (e.action == ContinuityAction::kMoves) moves = true;
    if (e.action == ContinuityAction::kExits) exits = true;
  }

  std::mt19937_64 rng(mix64(b.seed ^ 0x63616d657261ULL));
  std::string_view move = kCameraMoves[pick(rng, kCameraMoves.size())];
  double magnitude = static_cast<double>(rng() % 1000) / 1000.0;

  const auto& iv = b.presentation_interval;
  const std::size_t count = static_cast<std::size_t>(iv.length() * fps / 1000);
  const std::size_t tail_from = count - entering_tail(count);
  for (std::size_t i = 0; i < count; ++i) {
    FrameDescriptor f;
    f.time = iv.start + static_cast<std::int64_t>(i) * 1000 / fps;
    f.visible_objects = base;
    f.background = s.background;
    f.style = s.style;
    bool in_tail = i >= tail_from;
    if (in_tail && !entering.empty()) {
      f.visible_objects.insert(entering.begin(), entering.end());
      f.motion_note = "entering";
    } else if (moves) {
      f.motion_note = "moving";
    } else if (in_tail && exits) {
      f.motion_note = "exiting";
    } else {
      f.motion_note = "static";
    }
    char camera[64];
    std::snprintf(camera, sizeof(camera), "%s %.3f", std::string(move).c_str(),
                  magnitude * static_cast<double>(i) / static_cast<double>(count));
    f.camera = camera;
    seq.frames.push_back(std::move(f));
  }
  return seq;
}

}  // namespace pdm::cg
