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

#ifndef PDM_COMMON_BYTES_H_
#define PDM_COMMON_BYTES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdm {

using Bytes = std::vector<std::uint8_t>;

Bytes to_bytes(std::string_view text);
std::string_view as_text(std::span<const std::uint8_t> bytes);

// Little-endian append-only writer.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
  void varint(std::uint64_t v);
  void raw(std::span<const std::uint8_t> bytes);
  void raw(std::string_view bytes);
  // u32 length followed by the bytes.
  void lp_bytes(std::span<const std::uint8_t> bytes);
  void lp_string(std::string_view s);

  std::size_t size() const { return out_.size(); }
  // Overwrites a previously reserved u32 slot.
  void patch_u32(std::size_t at, std::uint32_t v);

  const Bytes& bytes() const { return out_; }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

// Bounds-checked reader. Failures throw the error type chosen by the caller
// through the Fail policy so each codec reports its own error kind.
class ByteReader {
 public:
  enum class Failure { kParse, kCodec };

  ByteReader(std::span<const std::uint8_t> data, Failure failure)
      : data_(data), failure_(failure) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  std::uint64_t varint();
  std::span<const std::uint8_t> raw(std::size_t n);
  std::string string(std::size_t n);
  Bytes lp_bytes();
  std::string lp_string();

  std::size_t offset() const { return pos_; }
  std::size_t remaining() const { return data_.size() - pos_; }
  bool at_end() const { return pos_ == data_.size(); }

  [[noreturn]] void fail(const std::string& message) const;

 private:
  void need(std::size_t n) const;

  std::span<const std::uint8_t> data_;
  Failure failure_;
  std::size_t pos_ = 0;
};

}  // namespace pdm

#endif  // PDM_COMMON_BYTES_H_
