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

#include "pdm/common/hash.h"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace pdm {

Fnv1a& Fnv1a::add(std::string_view bytes) {
  for (unsigned char c : bytes) {
    state_ ^= c;
    state_ *= kPrime;
  }
  return *this;
}

Fnv1a& Fnv1a::add_u64(std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    state_ ^= (value >> (8 * i)) & 0xff;
    state_ *= kPrime;
  }
  return *this;
}

Fnv1a& Fnv1a::add_field(std::string_view bytes) {
  add_u64(bytes.size());
  return add(bytes);
}

std::uint64_t fnv1a(std::string_view bytes) { return Fnv1a().add(bytes).digest(); }

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stage_seed(std::uint64_t user_seed, std::string_view stage,
                         std::span<const std::string> package_ids,
                         std::uint64_t segment) {
  std::vector<std::string_view> ids(package_ids.begin(), package_ids.end());
  std::sort(ids.begin(), ids.end());
  Fnv1a h;
  h.add_u64(user_seed).add_field(stage).add_u64(ids.size());
  for (auto id : ids) h.add_field(id);
  h.add_u64(segment);
  return mix64(h.digest());
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace pdm
