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

#include "pdm/ops/merge.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "pdm/common/error.h"
#include "pdm/package/top_k.h"

namespace pdm::ops {

std::string_view operation_mode_name(OperationMode mode) {
  switch (mode) {
    case OperationMode::kSingleSource: return "single";
    case OperationMode::kMultiSync: return "sync";
    case OperationMode::kMultiAsync: return "async";
  }
  return "?";
}

std::optional<OperationMode> operation_mode_from_name(std::string_view name) {
  for (auto mode : {OperationMode::kSingleSource, OperationMode::kMultiSync, OperationMode::kMultiAsync}) {
    if (operation_mode_name(mode) == name) return mode;
  }
  return std::nullopt;
}

const MergedElement* MergedPackage::find(const ElementRef& ref) const {
  for (const auto& e : elements) {
    if (e.origin_package_id == ref.package_id && e.element.element_id == ref.element_id) return &e;
  }
  return nullptr;
}

std::vector<std::string> MergedPackage::package_ids() const {
  std::vector<std::string> ids = sub_package_ids;
  ids.push_back(main_package_id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool is_exclusive_role(std::string_view role) {
  return role == package::kRoleBackground || role == package::kRoleStyle;
}

std::set<std::string> mandatory_features(const package::PromptPackage& p) {
  std::set<std::string> tags;
  for (const auto& e : p.elements) {
    if (e.mandatory && !e.feature_tag.empty()) tags.insert(e.feature_tag);
  }
  return tags;
}

bool schedule_precedes(const package::PromptPackage& a, const package::PromptPackage& b) {
  return std::tie(a.schedule.start, a.provider_id, a.package_id) <
         std::tie(b.schedule.start, b.provider_id, b.package_id);
}

MergedPackage merge_m1(const std::vector<package::PromptPackage>& packages,
                       const MergePolicy& policy) {
  if (packages.empty()) throw Error(ErrorCode::kEmptyInput, "nothing to merge");
  std::vector<package::PromptPackage> ordered;
  std::set<std::string> ids;
  for (const auto& p : packages) {
    if (!ids.insert(p.package_id).second) {
      throw Error(ErrorCode::kDuplicatePackage, "package " + p.package_id + " given twice");
    }
    auto report = package::validate_package(p);
    if (!report.ok()) {
      throw Error(ErrorCode::kValidation, "package " + p.package_id + ":\n" + report.render());
    }
    ordered.push_back(package::select_top_k(package::canonical(p), policy.k).package);
  }
  std::sort(ordered.begin(), ordered.end(), schedule_precedes);
  if (policy.main_override) {
    auto it = std::find_if(ordered.begin(), ordered.end(), [&](const auto& p) {
      return p.package_id == *policy.main_override;
    });
    if (it == ordered.end()) {
      throw Error(ErrorCode::kUnknownMain, "main package " + *policy.main_override + " is not an input");
    }
    std::rotate(ordered.begin(), it, it + 1);
  }

  MergedPackage m;
  m.main_package_id = ordered.front().package_id;
  std::int64_t start = ordered.front().schedule.start;
  std::int64_t end = ordered.front().schedule.end();
  for (const auto& p : ordered) {
    if (p.package_id != m.main_package_id) m.sub_package_ids.push_back(p.package_id);
    start = std::min(start, p.schedule.start);
    end = std::max(end, p.schedule.end());
    for (const auto& e : p.elements) m.elements.push_back({p.package_id, p.provider_id, e});
  }
  m.schedule = {start, end - start};

  for (std::string_view role : {package::kRoleBackground, package::kRoleStyle}) {
    auto key = [](const MergedElement& e) {
      return std::tie(e.element.priority, e.origin_provider_id, e.origin_package_id, e.element.element_id);
    };
    const MergedElement* winner = nullptr;
    std::size_t holders = 0;
    for (const auto& e : m.elements) {
      if (e.element.role != role) continue;
      ++holders;
      if (winner == nullptr || key(e) < key(*winner)) winner = &e;
    }
    if (holders < 2) continue;
    Conflict conflict;
    conflict.role = std::string(role);
    conflict.winner = winner->ref();
    for (const auto& e : m.elements) {
      if (e.element.role == role && &e != winner) conflict.losers.push_back(e.ref());
    }
    std::sort(conflict.losers.begin(), conflict.losers.end());
    std::erase_if(m.elements, [&](const MergedElement& e) {
      return e.element.role == role && std::find(conflict.losers.begin(), conflict.losers.end(),
                                                 e.ref()) != conflict.losers.end();
    });
    m.conflict_log.push_back(std::move(conflict));
  }
  return m;
}

}  // namespace pdm::ops
