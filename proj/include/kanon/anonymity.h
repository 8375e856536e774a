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

// k-anonymity verdicts.
//
// IsKAnonymous() audits a table against one explicit world: every row,
// restricted to the public attributes and decoded, must re-identify at least
// k distinct individuals.
//
// IsConservativelyKAnonymous() quantifies over every world that is
// individualized consistent with the table, i.e. every world in which each
// row can be attributed to a different individual. Such a world can always be
// shrunk to the n individuals of a matching without losing a violation, and
// the shrunk world is fixed by choosing one decoding per row (a "choice
// world"). Row i re-identifies, in a choice world, the rows whose choice lies
// in Dec(row i); an adversary minimizes that count by choosing outside
// Dec(row i) whenever Dec(row j) allows it. So the least count of row i over
// all choice worlds is the number of rows j with Dec(row j) ⊆ Dec(row i),
// which the default method evaluates directly. ChoiceWorldMethod::kEnumerate
// walks every choice vector instead and refuses above a configured bound.

#ifndef KANON_ANONYMITY_H_
#define KANON_ANONYMITY_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "kanon/decoding.h"
#include "kanon/relation.h"
#include "kanon/world.h"

namespace kanon {

// Everything an audit against one world needs.
class AuditContext {
 public:
  // PAttr[T] is computed as the attributes shared by table and world, minus
  // the identifier; it must be non-empty.
  static absl::StatusOr<AuditContext> Create(Table table, World world,
                                             DecodingFunction dec);

  // Narrows the public attributes to a non-empty subset of the computed ones.
  // Auditing a proper subset can miss re-identifications, so callers should
  // surface that to users.
  absl::StatusOr<AuditContext> RestrictedTo(const AttributeSet& pattrs) const;

  const Table& table() const { return table_; }
  const World& world() const { return world_; }
  const DecodingFunction& dec() const { return dec_; }
  const AttributeSet& pattrs() const { return pattrs_; }
  // True when pattrs() is a proper subset of the shared attributes.
  bool restricted() const { return restricted_; }

 private:
  AuditContext(Table table, World world, DecodingFunction dec,
               AttributeSet pattrs)
      : table_(std::move(table)),
        world_(std::move(world)),
        dec_(std::move(dec)),
        pattrs_(std::move(pattrs)) {}

  Table table_;
  World world_;
  DecodingFunction dec_;
  AttributeSet pattrs_;
  bool restricted_ = false;
};

struct RowCount {
  size_t index;
  int64_t count;
};

struct AnonymityReport {
  bool verdict = false;
  int64_t k_requested = 0;
  AttributeSet pattrs;
  std::vector<RowCount> per_row;
  // Smallest per-row count; nullopt for an empty table.
  std::optional<int64_t> min_count;
  // Rows whose count is below k.
  std::vector<size_t> witnesses;
  // Rows that re-identify nobody: the world is not consistent with them.
  std::vector<size_t> consistency_violations;
  // The table has no rows, so the verdict holds vacuously.
  bool degenerate = false;
};

absl::StatusOr<AnonymityReport> IsKAnonymous(const AuditContext& ctx,
                                             int64_t k);

struct AnonymityLevel {
  // Largest k for which the table is k-anonymous: the smallest per-row count,
  // 0 when the world is inconsistent, nullopt for an empty table.
  std::optional<int64_t> level;
  std::vector<size_t> violating_rows;
};

absl::StatusOr<AnonymityLevel> GetAnonymityLevel(const AuditContext& ctx);

// Every pattrs-value combination occurring in `table` occurs in at least k
// rows.
absl::StatusOr<bool> SatisfiesClassSizeCondition(const Table& table,
                                                 const AttributeSet& pattrs,
                                                 int64_t k);

struct RowAssignment {
  size_t row = 0;
  std::optional<IndividualId> individual;
  // A member of Dec(row[pattrs]) that re-identifies `individual`.
  std::optional<Tuple> witness;
};

struct ConsistencyMatching {
  bool complete = false;
  AttributeSet pattrs;
  std::vector<RowAssignment> assignment;
  size_t matched = 0;
};

// Individualized consistency, decided by maximum bipartite matching between
// table rows and individuals. The assignment reported is the
// lexicographically first maximum matching by row index.
absl::StatusOr<ConsistencyMatching> IsIndividualizedConsistent(
    const World& world, const Table& table, const DecodingFunction& dec);

enum class ChoiceWorldMethod {
  // Per-row adversarial choice world; polynomial.
  kMinimalCover,
  // Every choice vector; guarded by max_choice_vectors.
  kEnumerate,
};

struct ConservativeOptions {
  ChoiceWorldMethod method = ChoiceWorldMethod::kMinimalCover;
  uint64_t max_choice_vectors = 1'000'000;
};

struct ConservativeReport {
  bool verdict = false;
  int64_t k_requested = 0;
  AttributeSet pattrs;
  // Worst count of each row over all choice worlds.
  std::vector<RowCount> per_row;
  std::vector<size_t> witnesses;
  // For a false verdict: one decoding per row forming a violating world.
  std::vector<Tuple> counterexample;
  // Choice vectors visited (kEnumerate) or choice worlds built.
  uint64_t worlds_examined = 0;
  bool degenerate = false;
};

// Conservative k-anonymity over every individualized-consistent world.
// kEnumerate fails with ResourceExhausted when the number of choice vectors
// exceeds options.max_choice_vectors.
absl::StatusOr<ConservativeReport> IsConservativelyKAnonymous(
    const Table& table, const DecodingFunction& dec,
    const AttributeSet& pattrs, int64_t k,
    const ConservativeOptions& options = {});

// The number of choice vectors: the product of the rows' decode sizes,
// saturating at UINT64_MAX.
absl::StatusOr<uint64_t> ChoiceVectorCount(const Table& table,
                                           const DecodingFunction& dec,
                                           const AttributeSet& pattrs);

// Known lower bound on the world: every value combination on `attributes`
// that occurs re-identifies at least `min_count` individuals.
struct WorldConstraint {
  AttributeSet attributes;
  int64_t min_count = 0;
};

// True when a constraint alone guarantees k-anonymity of any consistent table
// whose public attributes are `pattrs`: some constraint covers pattrs with a
// bound of at least k.
bool AnonymityFromConstraints(const std::vector<WorldConstraint>& constraints,
                              const AttributeSet& pattrs, int64_t k);

}  // namespace kanon

#endif  // KANON_ANONYMITY_H_
