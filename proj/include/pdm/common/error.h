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

#ifndef PDM_COMMON_ERROR_H_
#define PDM_COMMON_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pdm {

enum class ErrorCode {
  kParse,
  kUnsupportedKind,
  kEmptyGraph,
  kCodec,
  kVersion,
  kEmptyInput,
  kOutOfRange,
  kUnknownMain,
  kStaleArrival,
  kNothingRemaining,
  kUnknownFeature,
  kEmptySelection,
  kUnknownAttribute,
  kDuplicatePackage,
  kValidation,
  kModeMismatch,
  kInvalidArgument,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

// Base error for every failing operation in the library. The code is the
// stable part; messages are for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Text parse failure. line and column are 1-based; offset is the byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::size_t offset)
      : Error(ErrorCode::kParse, message + " at line " + std::to_string(line) +
                                     ", column " + std::to_string(column)),
        line_(line),
        column_(column),
        offset_(offset) {}

  // Binary parse failure: only the offset is meaningful.
  ParseError(const std::string& message, std::size_t offset)
      : Error(ErrorCode::kParse,
              message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  std::size_t offset() const { return offset_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
  std::size_t offset_ = 0;
};

class CodecError : public Error {
 public:
  CodecError(const std::string& message, std::size_t offset)
      : Error(ErrorCode::kCodec,
              message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace pdm

#endif  // PDM_COMMON_ERROR_H_
