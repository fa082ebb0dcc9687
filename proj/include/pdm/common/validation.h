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

#ifndef PDM_COMMON_VALIDATION_H_
#define PDM_COMMON_VALIDATION_H_

#include <string>
#include <string_view>
#include <vector>

namespace pdm {

enum class IssueCode {
  // semantic descriptions
  kDuplicateId,
  kDanglingTarget,
  kUnknownRelation,
  kUnknownSource,
  kEmptyId,
  // prompt packages
  kDuplicateElement,
  kEmptyPayload,
  kInvalidSchedule,
  kNoElements,
  kPayloadMismatch,
  kEmptyElementId,
  // scenarios
  kInvalidScenario,
};

enum class Severity { kWarning, kError };

std::string_view issue_code_name(IssueCode code);

struct Issue {
  IssueCode code;
  Severity severity;
  std::string subject;
  std::string message;

  bool operator==(const Issue&) const = default;
};

// Validation never throws; it collects issues. An empty report means every
// invariant holds; ok() means there is nothing worse than a warning.
class ValidationReport {
 public:
  void add(IssueCode code, Severity severity, std::string subject, std::string message);
  void merge(const ValidationReport& other);

  bool empty() const { return issues_.empty(); }
  bool ok() const;
  std::size_t count(IssueCode code) const;
  const std::vector<Issue>& issues() const { return issues_; }

  std::string render() const;

 private:
  std::vector<Issue> issues_;
};

}  // namespace pdm

#endif  // PDM_COMMON_VALIDATION_H_
