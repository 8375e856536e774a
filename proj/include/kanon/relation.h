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

// Bag-semantics relational layer: schemas, tuples and multiset tables.
//
// Values are opaque text tokens compared by exact equality. Every operation
// keeps duplicate rows and preserves input row order. All types are immutable
// once constructed.

#ifndef KANON_RELATION_H_
#define KANON_RELATION_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace kanon {

using Value = std::string;
using Row = std::vector<Value>;

// An ordered list of pairwise distinct, non-empty attribute names.
class Schema {
 public:
  Schema() = default;

  static absl::StatusOr<Schema> Create(std::vector<std::string> names);

  size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<size_t> IndexOf(std::string_view name) const;
  bool Contains(std::string_view name) const {
    return IndexOf(name).has_value();
  }

  bool operator==(const Schema&) const = default;

 private:
  explicit Schema(std::vector<std::string> names) : names_(std::move(names)) {}

  std::vector<std::string> names_;
};

// A set of attribute names. Members are kept sorted, so iteration order and
// ToString() are deterministic regardless of how the set was built.
class AttributeSet {
 public:
  AttributeSet() = default;
  AttributeSet(std::initializer_list<std::string> names);
  explicit AttributeSet(std::vector<std::string> names);

  static AttributeSet Of(const Schema& schema) {
    return AttributeSet(schema.names());
  }

  bool empty() const { return names_.empty(); }
  size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  auto begin() const { return names_.begin(); }
  auto end() const { return names_.end(); }

  bool Contains(std::string_view name) const;
  bool IsSubsetOf(const AttributeSet& other) const;
  bool IsSubsetOf(const Schema& schema) const;

  AttributeSet Union(const AttributeSet& other) const;
  AttributeSet Intersect(const AttributeSet& other) const;
  AttributeSet Minus(const AttributeSet& other) const;

  // "{A, B}"
  std::string ToString() const;

  bool operator==(const AttributeSet&) const = default;
  auto operator<=>(const AttributeSet&) const = default;

 private:
  std::vector<std::string> names_;
};

// A tuple t over a schema; t[A] is obtained with Restrict().
class Tuple {
 public:
  Tuple() = default;

  static absl::StatusOr<Tuple> Create(Schema schema, Row values);
  static absl::StatusOr<Tuple> FromPairs(
      std::vector<std::pair<std::string, Value>> cells);

  const Schema& schema() const { return schema_; }
  const Row& values() const { return values_; }
  size_t size() const { return values_.size(); }
  const Value& value(size_t i) const { return values_[i]; }
  std::optional<Value> Get(std::string_view attribute) const;

  // Restriction to `attrs`, in this tuple's schema order.
  absl::StatusOr<Tuple> Restrict(const AttributeSet& attrs) const;

  // "(ZIP=20033, Disease=D1)"
  std::string ToString() const;

  bool operator==(const Tuple& other) const {
    return schema_ == other.schema_ && values_ == other.values_;
  }
  bool operator<(const Tuple& other) const {
    return std::tie(schema_.names(), values_) <
           std::tie(other.schema_.names(), other.values_);
  }

 private:
  friend class Table;

  Tuple(Schema schema, Row values)
      : schema_(std::move(schema)), values_(std::move(values)) {}

  Schema schema_;
  Row values_;
};

// A multiset of rows over a schema.
class Table {
 public:
  Table() = default;

  static absl::StatusOr<Table> Create(Schema schema, std::vector<Row> rows);
  // Convenience for literals: validates the header and every row.
  static absl::StatusOr<Table> FromRows(std::vector<std::string> header,
                                        std::vector<Row> rows);

  const Schema& schema() const { return schema_; }
  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(size_t i) const { return rows_[i]; }
  size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  AttributeSet attributes() const { return AttributeSet::Of(schema_); }

  Tuple tuple(size_t i) const;

  bool operator==(const Table&) const = default;

 private:
  Table(Schema schema, std::vector<Row> rows)
      : schema_(std::move(schema)), rows_(std::move(rows)) {}

  Schema schema_;
  std::vector<Row> rows_;
};

// Column positions of `attrs` within `schema`, in schema order. Fails with
// NotFound for an attribute outside the schema.
absl::StatusOr<std::vector<size_t>> ResolveColumns(const Schema& schema,
                                                   const AttributeSet& attrs);

// Bag projection onto `attrs`; the result has exactly table.size() rows.
absl::StatusOr<Table> Project(const Table& table, const AttributeSet& attrs);

// All rows agreeing with `probe` on probe's schema, duplicates kept.
absl::StatusOr<Table> SelectEq(const Table& table, const Tuple& probe);

// Number of distinct elements of a bag of values.
size_t DistinctCount(std::span<const Value> values);

}  // namespace kanon

#endif  // KANON_RELATION_H_
