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

#include "kanon/world.h"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "kanon/status_macros.h"

namespace kanon {
namespace {

absl::Status ValidateProbeSchema(const World& world, const Schema& schema) {
  if (schema.empty()) {
    return absl::InvalidArgumentError(
        "re-identification needs a non-empty attribute set");
  }
  for (const std::string& name : schema.names()) {
    if (name == world.id_attribute()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "the identifier attribute '", name, "' cannot be probed"));
    }
    if (!world.attributes().Contains(name)) {
      return absl::NotFoundError(
          absl::StrCat("attribute '", name, "' is not in the world"));
    }
  }
  return absl::OkStatus();
}

absl::Status ValidateAttributeSet(const World& world, const AttributeSet& a,
                                  const char* what) {
  if (a.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat(what, " must be non-empty"));
  }
  if (!a.IsSubsetOf(world.attributes())) {
    return absl::InvalidArgumentError(
        absl::StrCat(what, " ", a.ToString(),
                     " is not a subset of the world attributes ",
                     world.attributes().ToString()));
  }
  return absl::OkStatus();
}

}  // namespace

World::World(Table relation, std::string id_attribute, size_t id_column,
             WorldOptions options)
    : relation_(std::move(relation)),
      id_attribute_(std::move(id_attribute)),
      id_column_(id_column),
      options_(options),
      attributes_(relation_.attributes().Minus(AttributeSet{id_attribute_})) {}

absl::StatusOr<World> World::Create(Table relation, std::string id_attribute,
                                    WorldOptions options) {
  std::optional<size_t> id_column = relation.schema().IndexOf(id_attribute);
  if (!id_column.has_value()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "identifier attribute '", id_attribute, "' is not in the world"));
  }
  std::unordered_map<std::string_view, size_t> first_row;
  for (size_t r = 0; r < relation.size(); ++r) {
    const Value& id = relation.row(r)[*id_column];
    if (id.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("world row ", r + 1, " has an empty identifier"));
    }
    auto [it, inserted] = first_row.emplace(id, r);
    if (!inserted && !options.allow_duplicate_individual_rows) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate individual id '", id, "' in world rows ",
                       it->second + 1, " and ", r + 1));
    }
  }
  return World(std::move(relation), std::move(id_attribute), *id_column,
               options);
}

IndividualSet World::Individuals() const {
  IndividualSet out;
  for (size_t r = 0; r < num_rows(); ++r) out.insert(individual(r));
  return out;
}

AttributeSet PublicAttributes(const World& world, const Table& table) {
  return world.attributes().Intersect(table.attributes());
}

absl::StatusOr<std::vector<size_t>> MatchingWorldRows(
    const World& world, const DecodingFunction& dec, const Tuple& t) {
  KANON_RETURN_IF_ERROR(ValidateProbeSchema(world, t.schema()));
  std::vector<size_t> columns;
  for (const std::string& name : t.schema().names()) {
    columns.push_back(*world.relation().schema().IndexOf(name));
  }
  std::vector<size_t> rows;
  for (size_t r = 0; r < world.num_rows(); ++r) {
    const Row& row = world.relation().row(r);
    bool match = true;
    for (size_t i = 0; i < columns.size() && match; ++i) {
      match = dec.Covers(t.schema().name(i), t.value(i), row[columns[i]]);
    }
    if (match) rows.push_back(r);
  }
  return rows;
}

absl::StatusOr<IndividualSet> Reid(const World& world, const Tuple& t,
                                   const DecodingFunction& dec) {
  KANON_RETURN_IF_ERROR(ValidateProbeSchema(world, t.schema()));
  for (size_t i = 0; i < t.size(); ++i) {
    if (dec.IsGeneral(t.schema().name(i), t.value(i))) {
      return absl::InvalidArgumentError(
          absl::StrCat("re-identification takes specific values only; ",
                       t.schema().name(i), "='", t.value(i), "' is general"));
    }
  }
  KANON_ASSIGN_OR_RETURN(Table selected, SelectEq(world.relation(), t));
  IndividualSet out;
  for (const Row& row : selected.rows()) out.insert(row[world.id_column()]);
  return out;
}

absl::StatusOr<IndividualSet> ReidDecoded(const World& world,
                                          const DecodingFunction& dec,
                                          const Tuple& t) {
  KANON_ASSIGN_OR_RETURN(std::vector<size_t> rows,
                         MatchingWorldRows(world, dec, t));
  IndividualSet out;
  for (size_t r : rows) out.insert(world.individual(r));
  return out;
}

absl::StatusOr<bool> IsConsistent(const World& world, const Table& table,
                                  const DecodingFunction& dec) {
  const AttributeSet pattrs = PublicAttributes(world, table);
  if (pattrs.empty()) {
    return absl::InvalidArgumentError(
        "table shares no public attribute with the world");
  }
  KANON_ASSIGN_OR_RETURN(Table projected, Project(table, pattrs));
  for (size_t r = 0; r < projected.size(); ++r) {
    KANON_ASSIGN_OR_RETURN(std::vector<size_t> rows,
                           MatchingWorldRows(world, dec, projected.tuple(r)));
    if (rows.empty()) return false;
  }
  return true;
}

absl::StatusOr<bool> CheckSupertupleInclusion(const World& world,
                                              const AttributeSet& a,
                                              const AttributeSet& b) {
  KANON_RETURN_IF_ERROR(ValidateAttributeSet(world, a, "attribute set a"));
  KANON_RETURN_IF_ERROR(ValidateAttributeSet(world, b, "attribute set b"));
  if (!a.IsSubsetOf(b)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "supertuple inclusion needs a ⊆ b; got ", a.ToString(), " and ",
        b.ToString()));
  }
  KANON_ASSIGN_OR_RETURN(Table on_a, Project(world.relation(), a));
  KANON_ASSIGN_OR_RETURN(Table on_b, Project(world.relation(), b));

  // Occurring b-tuples grouped by their restriction to a.
  std::map<Tuple, std::set<Tuple>> extensions;
  for (size_t r = 0; r < world.num_rows(); ++r) {
    extensions[on_a.tuple(r)].insert(on_b.tuple(r));
  }
  for (const auto& [t, supertuples] : extensions) {
    KANON_ASSIGN_OR_RETURN(IndividualSet expected, Reid(world, t));
    IndividualSet covered;
    for (const Tuple& s : supertuples) {
      KANON_ASSIGN_OR_RETURN(Tuple back, s.Restrict(a));
      if (!(back == t)) return false;
      KANON_ASSIGN_OR_RETURN(IndividualSet part, Reid(world, s));
      covered.insert(part.begin(), part.end());
    }
    if (covered != expected) return false;
  }
  return true;
}

}  // namespace kanon
