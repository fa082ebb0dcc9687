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

#ifndef PDM_COMMON_HASH_H_
#define PDM_COMMON_HASH_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace pdm {

// FNV-1a, 64 bit. Used for every persisted hash so values are stable across
// platforms and standard library implementations.
class Fnv1a {
 public:
  static constexpr std::uint64_t kOffset = 0xcbf29ce484222325ULL;
  static constexpr std::uint64_t kPrime = 0x100000001b3ULL;

  Fnv1a& add(std::string_view bytes);
  Fnv1a& add_u64(std::uint64_t value);
  // Adds a length prefix first so ("ab","c") and ("a","bc") differ.
  Fnv1a& add_field(std::string_view bytes);

  std::uint64_t digest() const { return state_; }

 private:
  std::uint64_t state_ = kOffset;
};

std::uint64_t fnv1a(std::string_view bytes);

// SplitMix64 finalizer; spreads low-entropy inputs over all 64 bits.
std::uint64_t mix64(std::uint64_t x);

// Stable seed for a pipeline stage: (user seed, stage name, sorted package
// ids, segment index).
std::uint64_t stage_seed(std::uint64_t user_seed, std::string_view stage,
                         std::span<const std::string> package_ids,
                         std::uint64_t segment);

std::string hex64(std::uint64_t value);

}  // namespace pdm

#endif  // PDM_COMMON_HASH_H_
