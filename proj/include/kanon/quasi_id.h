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

// Quasi-identifiers are properties of the world, not of a published table.
// An attribute set A is a k-QI when some value combination on A occurring in
// the world re-identifies between 1 and k individuals. Its level is the
// smallest such count, so A is a k-QI exactly when level <= k and a proper
// k-QI when level == k.

#ifndef KANON_QUASI_ID_H_
#define KANON_QUASI_ID_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "kanon/relation.h"
#include "kanon/world.h"

namespace kanon {

struct QiWitness {
  Tuple tuple;
  int64_t count = 0;
};

struct QiLevel {
  AttributeSet attrs;
  // nullopt when no tuple on attrs occurs in the world (empty world).
  std::optional<int64_t> level;
  std::optional<QiWitness> witness;
};

absl::StatusOr<QiLevel> GetQiLevel(const World& world,
                                   const AttributeSet& attrs);

// Requires k >= 1.
absl::StatusOr<bool> IsKQi(const World& world, const AttributeSet& attrs,
                           int64_t k);

// Inclusion-minimal k-QIs with at most `max_size` attributes, by increasing
// size and lexicographically within a size. The default bound is one less
// than the number of non-identifier attributes (at least 1). Supersets of a
// found k-QI are k-QIs themselves and are skipped.
absl::StatusOr<std::vector<AttributeSet>> MinimalKQis(
    const World& world, int64_t k, std::optional<size_t> max_size = {});

}  // namespace kanon

#endif  // KANON_QUASI_ID_H_
