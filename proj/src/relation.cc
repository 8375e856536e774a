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

#include "kanon/relation.h"

#include <algorithm>
#include <iterator>
#include <unordered_set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "kanon/status_macros.h"

namespace kanon {

absl::StatusOr<Schema> Schema::Create(std::vector<std::string> names) {
  std::unordered_set<std::string> seen;
  for (const std::string& name : names) {
    if (name.empty()) {
      return absl::InvalidArgumentError("attribute names must be non-empty");
    }
    if (!seen.insert(name).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate attribute name '", name, "'"));
    }
  }
  return Schema(std::move(names));
}

std::optional<size_t> Schema::IndexOf(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

AttributeSet::AttributeSet(std::initializer_list<std::string> names)
    : AttributeSet(std::vector<std::string>(names)) {}

AttributeSet::AttributeSet(std::vector<std::string> names)
    : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

bool AttributeSet::Contains(std::string_view name) const {
  return std::binary_search(names_.begin(), names_.end(), name);
}

bool AttributeSet::IsSubsetOf(const AttributeSet& other) const {
  return std::includes(other.names_.begin(), other.names_.end(),
                       names_.begin(), names_.end());
}

bool AttributeSet::IsSubsetOf(const Schema& schema) const {
  return std::all_of(names_.begin(), names_.end(), [&](const std::string& n) {
    return schema.Contains(n);
  });
}

AttributeSet AttributeSet::Union(const AttributeSet& other) const {
  std::vector<std::string> out;
  std::set_union(names_.begin(), names_.end(), other.names_.begin(),
                 other.names_.end(), std::back_inserter(out));
  return AttributeSet(std::move(out));
}

AttributeSet AttributeSet::Intersect(const AttributeSet& other) const {
  std::vector<std::string> out;
  std::set_intersection(names_.begin(), names_.end(), other.names_.begin(),
                        other.names_.end(), std::back_inserter(out));
  return AttributeSet(std::move(out));
}

AttributeSet AttributeSet::Minus(const AttributeSet& other) const {
  std::vector<std::string> out;
  std::set_difference(names_.begin(), names_.end(), other.names_.begin(),
                      other.names_.end(), std::back_inserter(out));
  return AttributeSet(std::move(out));
}

std::string AttributeSet::ToString() const {
  return absl::StrCat("{", absl::StrJoin(names_, ", "), "}");
}

absl::StatusOr<Tuple> Tuple::Create(Schema schema, Row values) {
  if (schema.size() != values.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("tuple has ", values.size(), " values for ",
                     schema.size(), " attributes"));
  }
  return Tuple(std::move(schema), std::move(values));
}

absl::StatusOr<Tuple> Tuple::FromPairs(
    std::vector<std::pair<std::string, Value>> cells) {
  std::vector<std::string> names;
  Row values;
  names.reserve(cells.size());
  values.reserve(cells.size());
  for (auto& [name, value] : cells) {
    names.push_back(std::move(name));
    values.push_back(std::move(value));
  }
  KANON_ASSIGN_OR_RETURN(Schema schema, Schema::Create(std::move(names)));
  return Tuple(std::move(schema), std::move(values));
}

std::optional<Value> Tuple::Get(std::string_view attribute) const {
  std::optional<size_t> index = schema_.IndexOf(attribute);
  if (!index.has_value()) return std::nullopt;
  return values_[*index];
}

absl::StatusOr<Tuple> Tuple::Restrict(const AttributeSet& attrs) const {
  KANON_ASSIGN_OR_RETURN(std::vector<size_t> columns,
                         ResolveColumns(schema_, attrs));
  std::vector<std::string> names;
  Row values;
  for (size_t c : columns) {
    names.push_back(schema_.name(c));
    values.push_back(values_[c]);
  }
  KANON_ASSIGN_OR_RETURN(Schema schema, Schema::Create(std::move(names)));
  return Tuple(std::move(schema), std::move(values));
}

std::string Tuple::ToString() const {
  std::vector<std::string> parts;
  parts.reserve(values_.size());
  for (size_t i = 0; i < values_.size(); ++i) {
    parts.push_back(absl::StrCat(schema_.name(i), "=", values_[i]));
  }
  return absl::StrCat("(", absl::StrJoin(parts, ", "), ")");
}

absl::StatusOr<Table> Table::Create(Schema schema, std::vector<Row> rows) {
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != schema.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", i, " has ", rows[i].size(), " values for ",
                       schema.size(), " attributes"));
    }
  }
  return Table(std::move(schema), std::move(rows));
}

absl::StatusOr<Table> Table::FromRows(std::vector<std::string> header,
                                      std::vector<Row> rows) {
  KANON_ASSIGN_OR_RETURN(Schema schema, Schema::Create(std::move(header)));
  return Create(std::move(schema), std::move(rows));
}

Tuple Table::tuple(size_t i) const { return Tuple(schema_, rows_[i]); }

absl::StatusOr<std::vector<size_t>> ResolveColumns(const Schema& schema,
                                                   const AttributeSet& attrs) {
  for (const std::string& name : attrs) {
    if (!schema.Contains(name)) {
      return absl::NotFoundError(
          absl::StrCat("unknown attribute '", name, "'"));
    }
  }
  std::vector<size_t> columns;
  for (size_t i = 0; i < schema.size(); ++i) {
    if (attrs.Contains(schema.name(i))) columns.push_back(i);
  }
  return columns;
}

absl::StatusOr<Table> Project(const Table& table, const AttributeSet& attrs) {
  if (attrs.empty()) {
    return absl::InvalidArgumentError("projection needs at least one attribute");
  }
  KANON_ASSIGN_OR_RETURN(std::vector<size_t> columns,
                         ResolveColumns(table.schema(), attrs));
  std::vector<std::string> names;
  for (size_t c : columns) names.push_back(table.schema().name(c));
  KANON_ASSIGN_OR_RETURN(Schema schema, Schema::Create(std::move(names)));

  std::vector<Row> rows;
  rows.reserve(table.size());
  for (const Row& row : table.rows()) {
    Row projected;
    projected.reserve(columns.size());
    for (size_t c : columns) projected.push_back(row[c]);
    rows.push_back(std::move(projected));
  }
  return Table::Create(std::move(schema), std::move(rows));
}

absl::StatusOr<Table> SelectEq(const Table& table, const Tuple& probe) {
  std::vector<size_t> columns;
  columns.reserve(probe.size());
  for (const std::string& name : probe.schema().names()) {
    std::optional<size_t> index = table.schema().IndexOf(name);
    if (!index.has_value()) {
      return absl::NotFoundError(
          absl::StrCat("unknown attribute '", name, "' in selection"));
    }
    columns.push_back(*index);
  }
  std::vector<Row> rows;
  for (const Row& row : table.rows()) {
    bool match = true;
    for (size_t i = 0; i < columns.size() && match; ++i) {
      match = row[columns[i]] == probe.value(i);
    }
    if (match) rows.push_back(row);
  }
  return Table::Create(table.schema(), std::move(rows));
}

size_t DistinctCount(std::span<const Value> values) {
  return std::unordered_set<std::string_view>(values.begin(), values.end())
      .size();
}

}  // namespace kanon
