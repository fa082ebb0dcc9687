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

#ifndef PDM_PACKAGE_PACKAGE_CODEC_H_
#define PDM_PACKAGE_PACKAGE_CODEC_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "pdm/common/bytes.h"
#include "pdm/package/prompt_package.h"

namespace pdm::package {

inline constexpr char kPackageMagic[4] = {'P', 'D', 'M', '1'};
inline constexpr std::uint8_t kWireVersion = 1;

// Wire form, all integers little-endian:
//
//   "PDM1" wire_version:u8
//   package_id:lpstr provider_id:lpstr version:u32
//   start:i64 duration:i64
//   count:u32 { record_len:u32 element }*          elements by element_id
//
//   element = element_id:lpstr modality:u8 role:lpstr priority:u32
//             mandatory:u8 feature_tag:lpstr payload:lpbytes
//
// lpstr/lpbytes are a u32 length followed by the bytes. Semantics payloads
// carry the SDG1 encoding of their graph.
Bytes encode_package(const PromptPackage& p);

// Throws CodecError (with offset) on truncated or malformed input and
// Error(kVersion) on an unknown wire version.
PromptPackage decode_package(std::span<const std::uint8_t> bytes);

std::size_t package_wire_size(const PromptPackage& p);

// Bytes an element adds on top of its payload:
// 26 + |element_id| + |role| + |feature_tag|.
std::size_t element_overhead(const ServiceElement& e);

}  // namespace pdm::package

#endif  // PDM_PACKAGE_PACKAGE_CODEC_H_
