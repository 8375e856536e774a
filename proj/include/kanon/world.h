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

// A relational world: a closed, finite relation in which one attribute
// identifies the individual each row describes. Re-identification of a tuple
// is a selection on the tuple's attributes followed by a projection onto the
// identifier, so a relational world satisfies supertuple inclusion by
// construction; CheckSupertupleInclusion() verifies it explicitly.

#ifndef KANON_WORLD_H_
#define KANON_WORLD_H_

#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "kanon/decoding.h"
#include "kanon/relation.h"

namespace kanon {

using IndividualId = std::string;
using IndividualSet = std::set<IndividualId>;

struct WorldOptions {
  // When set, several rows may describe the same individual; re-identified
  // sets are still sets of distinct identifiers.
  bool allow_duplicate_individual_rows = false;
};

class World {
 public:
  World() = default;

  static absl::StatusOr<World> Create(Table relation, std::string id_attribute,
                                      WorldOptions options = {});

  const Table& relation() const { return relation_; }
  const std::string& id_attribute() const { return id_attribute_; }
  size_t id_column() const { return id_column_; }
  const WorldOptions& options() const { return options_; }

  // Attr[W] minus the identifier: the attributes available for probing.
  const AttributeSet& attributes() const { return attributes_; }
  size_t num_rows() const { return relation_.size(); }
  const IndividualId& individual(size_t row) const {
    return relation_.row(row)[id_column_];
  }
  IndividualSet Individuals() const;

 private:
  World(Table relation, std::string id_attribute, size_t id_column,
        WorldOptions options);

  Table relation_;
  std::string id_attribute_;
  size_t id_column_ = 0;
  WorldOptions options_;
  AttributeSet attributes_;
};

// PAttr[T]: attributes shared by the world and the table, identifier excluded.
AttributeSet PublicAttributes(const World& world, const Table& table);

// ReID_W(t) for a tuple of specific values. Fails when t's schema is empty,
// mentions the identifier or an attribute outside the world, or when one of
// t's values is general under `dec`.
absl::StatusOr<IndividualSet> Reid(
    const World& world, const Tuple& t,
    const DecodingFunction& dec = DecodingFunction::Identity());

// The union of ReID_W(t') over t' ∈ Dec(t).
absl::StatusOr<IndividualSet> ReidDecoded(const World& world,
                                          const DecodingFunction& dec,
                                          const Tuple& t);

// Rows of the world whose values on t's schema lie in Dec(t). Same
// preconditions as ReidDecoded().
absl::StatusOr<std::vector<size_t>> MatchingWorldRows(
    const World& world, const DecodingFunction& dec, const Tuple& t);

// Consistency: every row of the table, restricted to PAttr[T], re-identifies
// at least one individual through some decoding.
absl::StatusOr<bool> IsConsistent(const World& world, const Table& table,
                                  const DecodingFunction& dec);

// Verifies supertuple inclusion for a ⊆ b: for each tuple t on `a` occurring
// in the world, ReID(t) equals the union of ReID over the tuples on `b` that
// occur in the world and extend t.
absl::StatusOr<bool> CheckSupertupleInclusion(const World& world,
                                              const AttributeSet& a,
                                              const AttributeSet& b);

}  // namespace kanon

#endif  // KANON_WORLD_H_
