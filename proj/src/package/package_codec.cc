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

#include "pdm/package/package_codec.h"

#include "pdm/common/error.h"
#include "pdm/semdesc/graph_codec.h"

namespace pdm::package {

Bytes encode_package(const PromptPackage& input) {
  PromptPackage p = canonical(input);
  ByteWriter w;
  w.raw(std::string_view(kPackageMagic, 4));
  w.u8(kWireVersion);
  w.lp_string(p.package_id);
  w.lp_string(p.provider_id);
  w.u32(p.version);
  w.i64(p.schedule.start);
  w.i64(p.schedule.duration);
  w.u32(static_cast<std::uint32_t>(p.elements.size()));
  for (const auto& e : p.elements) {
    std::size_t at = w.size();
    w.u32(0);
    w.lp_string(e.element_id);
    w.u8(static_cast<std::uint8_t>(e.modality));
    w.lp_string(e.role);
    w.u32(e.priority);
    w.u8(e.mandatory ? 1 : 0);
    w.lp_string(e.feature_tag);
    if (const auto* g = e.graph()) {
      w.lp_bytes(semdesc::serialize_graph(*g));
    } else {
      w.lp_bytes(*e.bytes());
    }
    w.patch_u32(at, static_cast<std::uint32_t>(w.size() - at - 4));
  }
  return w.take();
}

PromptPackage decode_package(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes, ByteReader::Failure::kCodec);
  if (as_text(r.raw(4)) != std::string_view(kPackageMagic, 4)) {
    throw CodecError("bad magic, expected PDM1", 0);
  }
  if (std::uint8_t version = r.u8(); version != kWireVersion) {
    throw Error(ErrorCode::kVersion, "unsupported wire version " + std::to_string(version));
  }
  PromptPackage p;
  p.package_id = r.lp_string();
  p.provider_id = r.lp_string();
  p.version = r.u32();
  p.schedule.start = r.i64();
  p.schedule.duration = r.i64();
  std::uint32_t count = r.u32();
  // Smallest possible element record is 30 bytes; reject absurd counts early.
  if (count > r.remaining() / 30 + 1) r.fail("element count exceeds input size");
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint32_t len = r.u32();
    if (len > r.remaining()) r.fail("element record overruns input");
    std::size_t end = r.offset() + len;
    ServiceElement e;
    e.element_id = r.lp_string();
    std::uint8_t modality = r.u8();
    if (modality >= kAllModalities.size()) r.fail("unknown modality " + std::to_string(modality));
    e.modality = static_cast<Modality>(modality);
    e.role = r.lp_string();
    e.priority = r.u32();
    std::uint8_t mandatory = r.u8();
    if (mandatory > 1) r.fail("bad mandatory flag");
    e.mandatory = mandatory == 1;
    e.feature_tag = r.lp_string();
    std::size_t payload_at = r.offset() + 4;
    Bytes payload = r.lp_bytes();
    if (e.modality == Modality::kSemantics) {
      try {
        e.payload = semdesc::parse_graph(payload);
      } catch (const ParseError& err) {
        throw CodecError("bad semantics payload: " + std::string(err.what()),
                         payload_at + err.offset());
      }
    } else {
      e.payload = std::move(payload);
    }
    if (r.offset() != end) r.fail("element record length mismatch");
    p.elements.push_back(std::move(e));
  }
  if (!r.at_end()) r.fail("trailing bytes after package");
  return p;
}

std::size_t package_wire_size(const PromptPackage& p) { return encode_package(p).size(); }

std::size_t element_overhead(const ServiceElement& e) {
  return 26 + e.element_id.size() + e.role.size() + e.feature_tag.size();
}

}  // namespace pdm::package
