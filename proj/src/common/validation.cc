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

#include "pdm/common/validation.h"

#include <algorithm>

#include "pdm/common/error.h"

namespace pdm {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kUnsupportedKind: return "UnsupportedKind";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kCodec: return "CodecError";
    case ErrorCode::kVersion: return "VersionError";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kUnknownMain: return "UnknownMain";
    case ErrorCode::kStaleArrival: return "StaleArrival";
    case ErrorCode::kNothingRemaining: return "NothingRemaining";
    case ErrorCode::kUnknownFeature: return "UnknownFeature";
    case ErrorCode::kEmptySelection: return "EmptySelection";
    case ErrorCode::kUnknownAttribute: return "UnknownAttribute";
    case ErrorCode::kDuplicatePackage: return "DuplicatePackage";
    case ErrorCode::kValidation: return "ValidationError";
    case ErrorCode::kModeMismatch: return "ModeMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "IoError";
  }
  return "Error";
}

std::string_view issue_code_name(IssueCode code) {
  switch (code) {
    case IssueCode::kDuplicateId: return "DuplicateId";
    case IssueCode::kDanglingTarget: return "DanglingTarget";
    case IssueCode::kUnknownRelation: return "UnknownRelation";
    case IssueCode::kUnknownSource: return "UnknownSource";
    case IssueCode::kEmptyId: return "EmptyId";
    case IssueCode::kDuplicateElement: return "DuplicateElement";
    case IssueCode::kEmptyPayload: return "EmptyPayload";
    case IssueCode::kInvalidSchedule: return "InvalidSchedule";
    case IssueCode::kNoElements: return "NoElements";
    case IssueCode::kPayloadMismatch: return "PayloadMismatch";
    case IssueCode::kEmptyElementId: return "EmptyElementId";
    case IssueCode::kInvalidScenario: return "InvalidScenario";
  }
  return "Issue";
}

void ValidationReport::add(IssueCode code, Severity severity, std::string subject,
                           std::string message) {
  issues_.push_back({code, severity, std::move(subject), std::move(message)});
}

void ValidationReport::merge(const ValidationReport& other) {
  issues_.insert(issues_.end(), other.issues_.begin(), other.issues_.end());
}

bool ValidationReport::ok() const {
  return std::none_of(issues_.begin(), issues_.end(),
                      [](const Issue& i) { return i.severity == Severity::kError; });
}

std::size_t ValidationReport::count(IssueCode code) const {
  return std::count_if(issues_.begin(), issues_.end(),
                       [code](const Issue& i) { return i.code == code; });
}

std::string ValidationReport::render() const {
  if (issues_.empty()) return "valid: no issues\n";
  std::string out;
  for (const auto& i : issues_) {
    out += i.severity == Severity::kError ? "error   " : "warning ";
    out += issue_code_name(i.code);
    out += " [" + i.subject + "]: " + i.message + "\n";
  }
  return out;
}

}  // namespace pdm
