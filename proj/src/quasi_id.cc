//
// Copyright 2026 The kanon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "kanon/quasi_id.h"

#include <algorithm>
#include <map>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "kanon/status_macros.h"

namespace kanon {

absl::StatusOr<QiLevel> GetQiLevel(const World& world,
                                   const AttributeSet& attrs) {
  if (attrs.empty()) {
    return absl::InvalidArgumentError("QI analysis needs a non-empty set");
  }
  if (!attrs.IsSubsetOf(world.attributes())) {
    return absl::InvalidArgumentError(
        absl::StrCat(attrs.ToString(), " is not a subset of the world "
                     "attributes ", world.attributes().ToString()));
  }
  KANON_ASSIGN_OR_RETURN(Table projected, Project(world.relation(), attrs));

  // Distinct individuals per occurring combination; combinations that do not
  // occur re-identify nobody and cannot be QI witnesses.
  std::map<Row, std::set<IndividualId>> groups;
  for (size_t r = 0; r < projected.size(); ++r) {
    groups[projected.row(r)].insert(world.individual(r));
  }

  QiLevel out;
  out.attrs = attrs;
  for (const auto& [values, ids] : groups) {
    const int64_t count = static_cast<int64_t>(ids.size());
    if (!out.level.has_value() || count < *out.level) {
      out.level = count;
      out.witness = QiWitness{*Tuple::Create(projected.schema(), values), count};
    }
  }
  return out;
}

absl::StatusOr<bool> IsKQi(const World& world, const AttributeSet& attrs,
                           int64_t k) {
  if (k < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("k must be at least 1, got ", k));
  }
  KANON_ASSIGN_OR_RETURN(QiLevel level, GetQiLevel(world, attrs));
  return level.level.has_value() && *level.level <= k;
}

absl::StatusOr<std::vector<AttributeSet>> MinimalKQis(
    const World& world, int64_t k, std::optional<size_t> max_size) {
  if (k < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("k must be at least 1, got ", k));
  }
  const std::vector<std::string>& candidates = world.attributes().names();
  const size_t m = candidates.size();
  const size_t limit =
      std::min(max_size.value_or(m > 1 ? m - 1 : m), m);

  std::vector<AttributeSet> found;
  for (size_t size = 1; size <= limit; ++size) {
    // Combinations of `size` indices in lexicographic order.
    std::vector<size_t> pick(size);
    for (size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<std::string> names;
      for (size_t i : pick) names.push_back(candidates[i]);
      AttributeSet attrs(std::move(names));
      const bool pruned =
          std::any_of(found.begin(), found.end(), [&](const AttributeSet& q) {
            return q.IsSubsetOf(attrs);
          });
      if (!pruned) {
        KANON_ASSIGN_OR_RETURN(bool is_qi, IsKQi(world, attrs, k));
        if (is_qi) found.push_back(std::move(attrs));
      }
      size_t i = size;
      while (i > 0 && pick[i - 1] == m - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return found;
}

}  // namespace kanon
