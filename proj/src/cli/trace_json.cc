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

#include "pdm/cli/trace_json.h"

#include <cstdio>
#include <sstream>

#include "pdm/common/error.h"
#include "pdm/common/hash.h"

namespace pdm::cli {

using nlohmann::json;

namespace {

json refs_to_json(const std::vector<ops::ElementRef>& refs) {
  json out = json::array();
  for (const auto& r : refs) out.push_back(r.package_id + "/" + r.element_id);
  return out;
}

json position_to_json(const cg::GridPosition& p) { return {p.column, p.row}; }

std::string interval_text(const ops::Interval& iv) {
  return "[" + std::to_string(iv.start) + ", " + std::to_string(iv.end) + ")";
}

std::string braces(const std::set<std::string>& items) { return "{" + join(items) + "}"; }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string join(const std::set<std::string>& items, const char* separator) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += separator;
    out += item;
  }
  return out;
}

json merged_to_json(const ops::MergedPackage& m) {
  json elements = json::array();
  for (const auto& e : m.elements) {
    elements.push_back({{"origin", e.origin_package_id},
                        {"id", e.element.element_id},
                        {"modality", package::modality_name(e.element.modality)},
                        {"role", e.element.role},
                        {"priority", e.element.priority},
                        {"mandatory", e.element.mandatory},
                        {"feature_tag", e.element.feature_tag}});
  }
  json conflicts = json::array();
  for (const auto& c : m.conflict_log) {
    conflicts.push_back({{"role", c.role},
                         {"winner", refs_to_json({c.winner}).front()},
                         {"losers", refs_to_json(c.losers)}});
  }
  return {{"main", m.main_package_id},
          {"subs", m.sub_package_ids},
          {"elements", std::move(elements)},
          {"conflicts", std::move(conflicts)}};
}

json segment_to_json(const ops::TimeSegment& s) {
  return {{"interval", {s.interval.start, s.interval.end}},
          {"main", s.main_id},
          {"subs", s.sub_ids},
          {"features", s.features_present},
          {"fade_out", s.fade_out}};
}

json content_to_json(const cg::GeneratedContent& c) {
  json segments = json::array();
  for (const auto& seg : c.segments) {
    json j = segment_to_json(seg.timeline);
    j["first_sample"] = seg.first_sample;
    j["sample_count"] = seg.sample_count;
    j["bridged"] = seg.bridged;
    j["merged"] = merged_to_json(seg.merged);
    segments.push_back(std::move(j));
  }
  json flags = json::array();
  for (const auto& f : c.narrative.flags) {
    flags.push_back({{"index", f.index}, {"time", f.time_hint}, {"text", f.text}, {"refs", refs_to_json(f.element_refs)}});
  }
  json samples = json::array();
  for (const auto& s : c.scene_samples) {
    samples.push_back({{"index", s.index},
                       {"flags", {s.flag_range.first, s.flag_range.last}},
                       {"time", s.timestamp},
                       {"description", s.description}});
  }
  json boards = json::array();
  for (const auto& s : c.storyboards) {
    json objects = json::array();
    for (const auto& o : s.objects) objects.push_back({{"id", o.object_id}, {"at", position_to_json(o.position)}});
    boards.push_back({{"index", s.index},
                      {"objects", std::move(objects)},
                      {"background", s.background},
                      {"style", s.style}});
  }
  json books = json::array();
  for (const auto& b : c.continuity_books) {
    json entries = json::array();
    for (const auto& e : b.entries) {
      json j = {{"object", e.object_id},
                {"action", cg::continuity_action_name(e.action)},
                {"linked", e.linked_storyboard}};
      if (e.target_position) j["target"] = position_to_json(*e.target_position);
      entries.push_back(std::move(j));
    }
    books.push_back({{"index", b.index}, {"entries", std::move(entries)}});
  }
  json snapshots = json::array();
  for (const auto& b : c.bss_list) {
    snapshots.push_back({{"index", b.index},
                         {"interval", {b.presentation_interval.start, b.presentation_interval.end}},
                         {"descriptor", b.descriptor}});
  }
  json frames = json::array();
  for (const auto& seq : c.frames) {
    json list = json::array();
    for (const auto& f : seq.frames) {
      list.push_back({f.time, f.visible_objects, f.motion_note, f.camera});
    }
    frames.push_back({{"bss", seq.bss_index}, {"frames", std::move(list)}});
  }
  return {{"mode", ops::operation_mode_name(c.mode)},
          {"seed", c.seed},
          {"fps", c.fps},
          {"content_hash", hex64(content_hash(c))},
          {"frame_sequence_hash", hex64(frame_sequence_hash(c))},
          {"runtime_ms", c.runtime_length()},
          {"timeline", std::move(segments)},
          {"narrative", std::move(flags)},
          {"scene_samples", std::move(samples)},
          {"storyboards", std::move(boards)},
          {"continuity_books", std::move(books)},
          {"bss", std::move(snapshots)},
          {"frames", std::move(frames)}};
}

json traffic_to_json(const netsim::TrafficReport& r) {
  json j = {{"prompt_bytes", r.prompt_bytes},
            {"baseline_equivalent_bytes", r.baseline_equivalent_bytes},
            {"model_transfer_bytes", r.model_transfer_bytes},
            {"runtime_ms", r.runtime_ms},
            {"prompt_to_baseline_ratio", r.prompt_to_baseline_ratio},
            {"degenerate", r.degenerate}};
  j["break_even_programs"] = r.break_even_programs ? json(*r.break_even_programs) : json(nullptr);
  return j;
}

json simulation_to_json(const netsim::SimulationTrace& trace, const netsim::Scenario& s) {
  json agents = json::array();
  for (const auto& a : trace.agents) {
    json transitions = json::array();
    for (const auto& t : a.transitions) transitions.push_back({{"time", t.time}, {"visible", t.visible}});
    json receptions = json::array();
    for (const auto& r : a.receptions) {
      receptions.push_back({{"time", r.time},
                            {"broadcaster", r.broadcaster_id},
                            {"package", r.package_id},
                            {"bytes", r.wire_bytes},
                            {"cumulative_bytes", r.cumulative_prompt_bytes},
                            {"fed", r.fed}});
    }
    json phases = json::array();
    for (const auto& p : a.phases) {
      phases.push_back({{"interval", {p.interval.start, p.interval.end}},
                        {"visible", p.visible},
                        {"main", p.main_id},
                        {"features", p.features}});
    }
    json j = {{"id", a.agent_id},
              {"seed", a.seed},
              {"mode", ops::operation_mode_name(a.mode)},
              {"transitions", std::move(transitions)},
              {"receptions", std::move(receptions)},
              {"phases", std::move(phases)}};
    j["content"] = a.content ? content_to_json(*a.content) : json(nullptr);
    agents.push_back(std::move(j));
  }
  return {{"scenario", trace.scenario},
          {"traffic_inputs",
           {{"bitrate_bps", s.baseline.bitrate_bps},
            {"params", s.model_transfer.params},
            {"bytes_per_param", s.model_transfer.bytes_per_param},
            {"reception", netsim::reception_policy_name(s.reception)}}},
          {"agents", std::move(agents)},
          {"traffic", traffic_to_json(netsim::traffic_report(trace, s))}};
}

netsim::TrafficReport traffic_from_trace(const json& trace) {
  try {
    const json& inputs = trace.at("traffic_inputs");
    netsim::BaselineVideo baseline;
    baseline.bitrate_bps = inputs.at("bitrate_bps").get<std::uint64_t>();
    netsim::ModelTransfer model;
    model.params = inputs.at("params").get<std::uint64_t>();
    model.bytes_per_param = inputs.at("bytes_per_param").get<std::uint64_t>();
    std::uint64_t prompt = 0;
    std::int64_t runtime = 0;
    for (const auto& a : trace.at("agents")) {
      for (const auto& r : a.at("receptions")) prompt += r.at("bytes").get<std::uint64_t>();
      if (!a.at("content").is_null()) runtime += a.at("content").at("runtime_ms").get<std::int64_t>();
    }
    return netsim::traffic_for(prompt, runtime, baseline, model);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("not a simulation trace: ") + e.what());
  }
}

std::string render_timeline(const cg::GeneratedContent& c) {
  std::ostringstream out;
  for (const auto& seg : c.segments) {
    const auto& t = seg.timeline;
    std::set<std::string> subs(t.sub_ids.begin(), t.sub_ids.end());
    out << "  " << pad(interval_text(t.interval), 18) << " main=" << t.main_id
        << " subs=" << braces(subs) << " features=" << braces(t.features_present)
        << " fade_out=" << braces(t.fade_out) << "\n";
  }
  return out.str();
}

std::string render_phase_table(const std::vector<netsim::Phase>& phases) {
  std::ostringstream out;
  out << "  " << pad("interval", 18) << " " << pad("visible", 24) << " " << pad("main", 12)
      << " features\n";
  for (const auto& p : phases) {
    out << "  " << pad(interval_text(p.interval), 18) << " " << pad(braces(p.visible), 24) << " "
        << pad(p.main_id.empty() ? "-" : p.main_id, 12) << " " << braces(p.features) << "\n";
  }
  return out.str();
}

std::string render_traffic(const netsim::TrafficReport& r) {
  char ratio[64];
  std::snprintf(ratio, sizeof(ratio), "%.6f", r.prompt_to_baseline_ratio);
  std::ostringstream out;
  out << "  prompt bytes:              " << r.prompt_bytes << "\n"
      << "  baseline equivalent bytes: " << r.baseline_equivalent_bytes << "\n"
      << "  model transfer bytes:      " << r.model_transfer_bytes << "\n"
      << "  runtime ms:                " << r.runtime_ms << "\n"
      << "  prompt/baseline ratio:     " << ratio << "\n";
  if (r.break_even_programs) {
    char programs[64];
    std::snprintf(programs, sizeof(programs), "%.1f", *r.break_even_programs);
    out << "  break-even programs:       " << programs << "\n";
  } else {
    out << "  break-even programs:       n/a\n";
  }
  if (r.degenerate) out << "  degenerate: no content played\n";
  return out.str();
}

std::string render_content_summary(const cg::GeneratedContent& c) {
  std::ostringstream out;
  out << "mode: " << ops::operation_mode_name(c.mode) << "\n"
      << "content hash: " << hex64(content_hash(c)) << "\n"
      << "frame sequence hash: " << hex64(frame_sequence_hash(c)) << "\n"
      << "narrative flags: " << c.narrative.flags.size()
      << ", scenes: " << c.scene_samples.size() << ", runtime ms: " << c.runtime_length() << "\n"
      << "timeline:\n"
      << render_timeline(c) << "scenes:\n";
  for (std::size_t k = 0; k < c.bss_list.size(); ++k) {
    std::set<std::string> objects;
    for (const auto& o : c.storyboards[k].objects) objects.insert(o.object_id);
    out << "  " << pad(std::to_string(k), 4) << pad(interval_text(c.bss_list[k].presentation_interval), 18)
        << " objects=" << braces(objects) << " background=" << c.storyboards[k].background
        << " style=" << c.storyboards[k].style << " frames=" << c.frames[k].frames.size() << "\n";
  }
  return out.str();
}

}  // namespace pdm::cli
