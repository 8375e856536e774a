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

#include "kanon/anonymity.h"

#include <algorithm>
#include <limits>
#include <map>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "kanon/matching.h"
#include "kanon/status_macros.h"

namespace kanon {
namespace {

absl::Status CheckK(int64_t k) {
  if (k < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("k must be at least 2, got ", k));
  }
  return absl::OkStatus();
}

absl::StatusOr<Table> ProjectPublic(const Table& table,
                                    const AttributeSet& pattrs) {
  if (pattrs.empty()) {
    return absl::InvalidArgumentError("public attribute set must be non-empty");
  }
  return Project(table, pattrs);
}

absl::StatusOr<std::vector<int64_t>> PerRowCounts(const AuditContext& ctx) {
  KANON_ASSIGN_OR_RETURN(Table projected,
                         ProjectPublic(ctx.table(), ctx.pattrs()));
  std::vector<int64_t> counts;
  counts.reserve(projected.size());
  for (size_t r = 0; r < projected.size(); ++r) {
    KANON_ASSIGN_OR_RETURN(
        IndividualSet ids,
        ReidDecoded(ctx.world(), ctx.dec(), projected.tuple(r)));
    counts.push_back(static_cast<int64_t>(ids.size()));
  }
  return counts;
}

// Dec(row) of a projected table, one sorted value list per column.
using RowDecoding = std::vector<std::vector<Value>>;

std::vector<RowDecoding> DecodeRows(const Table& projected,
                                    const DecodingFunction& dec) {
  std::vector<RowDecoding> out;
  out.reserve(projected.size());
  for (const Row& row : projected.rows()) {
    RowDecoding d;
    for (size_t c = 0; c < row.size(); ++c) {
      d.push_back(dec.Decode(projected.schema().name(c), row[c]));
    }
    out.push_back(std::move(d));
  }
  return out;
}

bool InDecoding(const RowDecoding& d, const Row& choice) {
  for (size_t c = 0; c < choice.size(); ++c) {
    if (!std::binary_search(d[c].begin(), d[c].end(), choice[c])) return false;
  }
  return true;
}

// A member of `own` chosen to lie outside `avoid` when `own` allows it.
Row AdversarialChoice(const RowDecoding& own, const RowDecoding& avoid) {
  Row choice;
  for (const auto& values : own) choice.push_back(values.front());
  for (size_t c = 0; c < own.size(); ++c) {
    for (const Value& v : own[c]) {
      if (!std::binary_search(avoid[c].begin(), avoid[c].end(), v)) {
        choice[c] = v;
        return choice;
      }
    }
  }
  return choice;
}

std::vector<Tuple> ToTuples(const Schema& schema,
                            const std::vector<Row>& rows) {
  std::vector<Tuple> out;
  for (const Row& row : rows) out.push_back(*Tuple::Create(schema, row));
  return out;
}

void Summarize(ConservativeReport& report, const std::vector<int64_t>& worst) {
  report.verdict = true;
  for (size_t i = 0; i < worst.size(); ++i) {
    report.per_row.push_back({i, worst[i]});
    if (worst[i] < report.k_requested) {
      report.verdict = false;
      report.witnesses.push_back(i);
    }
  }
}

absl::Status MinimalCover(const Table& projected,
                          const std::vector<RowDecoding>& decoded,
                          ConservativeReport& report) {
  const size_t n = projected.size();
  std::vector<int64_t> worst(n, 0);
  std::optional<size_t> worst_row;
  std::vector<Row> worst_world;
  for (size_t i = 0; i < n; ++i) {
    // The choice world least favourable to row i.
    std::vector<Row> world;
    world.reserve(n);
    for (size_t j = 0; j < n; ++j) {
      world.push_back(AdversarialChoice(decoded[j], decoded[i]));
    }
    ++report.worlds_examined;
    for (const Row& choice : world) {
      if (InDecoding(decoded[i], choice)) ++worst[i];
    }
    if (!worst_row.has_value() || worst[i] < worst[*worst_row]) {
      worst_row = i;
      worst_world = std::move(world);
    }
  }
  Summarize(report, worst);
  if (!report.verdict) {
    report.counterexample = ToTuples(projected.schema(), worst_world);
  }
  return absl::OkStatus();
}

absl::Status Enumerate(const Table& projected, const DecodingFunction& dec,
                       const std::vector<RowDecoding>& decoded,
                       uint64_t max_vectors, ConservativeReport& report) {
  const size_t n = projected.size();
  std::vector<std::vector<Row>> choices(n);
  for (size_t j = 0; j < n; ++j) {
    KANON_ASSIGN_OR_RETURN(std::vector<Tuple> tuples,
                           DecodeTuple(dec, projected.tuple(j), max_vectors));
    for (const Tuple& t : tuples) choices[j].push_back(t.values());
  }
  // hits[j][c][i]: choice c of row j lies in Dec(row i).
  std::vector<std::vector<std::vector<char>>> hits(n);
  for (size_t j = 0; j < n; ++j) {
    for (const Row& choice : choices[j]) {
      std::vector<char> h(n);
      for (size_t i = 0; i < n; ++i) h[i] = InDecoding(decoded[i], choice);
      hits[j].push_back(std::move(h));
    }
  }

  std::vector<size_t> odometer(n, 0);
  std::vector<int64_t> counts(n, 0);
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < n; ++i) counts[i] += hits[j][0][i];
  }
  std::vector<int64_t> worst(n, std::numeric_limits<int64_t>::max());
  int64_t worst_seen = std::numeric_limits<int64_t>::max();
  std::vector<size_t> worst_vector;
  auto move_to = [&](size_t j, size_t c) {
    for (size_t i = 0; i < n; ++i) {
      counts[i] += hits[j][c][i] - hits[j][odometer[j]][i];
    }
    odometer[j] = c;
  };
  while (true) {
    ++report.worlds_examined;
    for (size_t i = 0; i < n; ++i) {
      worst[i] = std::min(worst[i], counts[i]);
      if (counts[i] < worst_seen) {
        worst_seen = counts[i];
        worst_vector = odometer;
      }
    }
    size_t pos = n;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (odometer[pos] + 1 < choices[pos].size()) {
        move_to(pos, odometer[pos] + 1);
        done = false;
        break;
      }
      move_to(pos, 0);
    }
    if (done) break;
  }
  Summarize(report, worst);
  if (!report.verdict) {
    std::vector<Row> world;
    for (size_t j = 0; j < n; ++j) world.push_back(choices[j][worst_vector[j]]);
    report.counterexample = ToTuples(projected.schema(), world);
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<AuditContext> AuditContext::Create(Table table, World world,
                                                  DecodingFunction dec) {
  AttributeSet pattrs = PublicAttributes(world, table);
  if (pattrs.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "table attributes ", table.attributes().ToString(),
        " share no public attribute with the world ",
        world.attributes().ToString()));
  }
  return AuditContext(std::move(table), std::move(world), std::move(dec),
                      std::move(pattrs));
}

absl::StatusOr<AuditContext> AuditContext::RestrictedTo(
    const AttributeSet& pattrs) const {
  const AttributeSet shared = PublicAttributes(world_, table_);
  if (pattrs.empty() || !pattrs.IsSubsetOf(shared)) {
    return absl::InvalidArgumentError(
        absl::StrCat("public attribute override ", pattrs.ToString(),
                     " must be a non-empty subset of ", shared.ToString()));
  }
  AuditContext out(table_, world_, dec_, pattrs);
  out.restricted_ = pattrs != shared;
  return out;
}

absl::StatusOr<AnonymityReport> IsKAnonymous(const AuditContext& ctx,
                                             int64_t k) {
  KANON_RETURN_IF_ERROR(CheckK(k));
  KANON_ASSIGN_OR_RETURN(std::vector<int64_t> counts, PerRowCounts(ctx));
  AnonymityReport report;
  report.k_requested = k;
  report.pattrs = ctx.pattrs();
  report.degenerate = counts.empty();
  for (size_t i = 0; i < counts.size(); ++i) {
    report.per_row.push_back({i, counts[i]});
    if (!report.min_count.has_value() || counts[i] < *report.min_count) {
      report.min_count = counts[i];
    }
    if (counts[i] < k) report.witnesses.push_back(i);
    if (counts[i] == 0) report.consistency_violations.push_back(i);
  }
  report.verdict = !report.min_count.has_value() || *report.min_count >= k;
  return report;
}

absl::StatusOr<AnonymityLevel> GetAnonymityLevel(const AuditContext& ctx) {
  KANON_ASSIGN_OR_RETURN(std::vector<int64_t> counts, PerRowCounts(ctx));
  AnonymityLevel out;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (!out.level.has_value() || counts[i] < *out.level) out.level = counts[i];
    if (counts[i] == 0) out.violating_rows.push_back(i);
  }
  return out;
}

absl::StatusOr<bool> SatisfiesClassSizeCondition(const Table& table,
                                                 const AttributeSet& pattrs,
                                                 int64_t k) {
  KANON_RETURN_IF_ERROR(CheckK(k));
  KANON_ASSIGN_OR_RETURN(Table projected, ProjectPublic(table, pattrs));
  std::map<Row, int64_t> class_size;
  for (const Row& row : projected.rows()) ++class_size[row];
  return std::all_of(class_size.begin(), class_size.end(),
                     [k](const auto& entry) { return entry.second >= k; });
}

absl::StatusOr<ConsistencyMatching> IsIndividualizedConsistent(
    const World& world, const Table& table, const DecodingFunction& dec) {
  ConsistencyMatching out;
  out.pattrs = PublicAttributes(world, table);
  KANON_ASSIGN_OR_RETURN(Table projected, ProjectPublic(table, out.pattrs));

  const IndividualSet individuals = world.Individuals();
  const std::vector<IndividualId> ids(individuals.begin(), individuals.end());
  auto index_of = [&](const IndividualId& id) {
    return static_cast<size_t>(
        std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };

  BipartiteGraph graph(projected.size(), ids.size());
  // First world row re-identifying each (table row, individual) edge.
  std::vector<std::map<size_t, size_t>> witness_row(projected.size());
  for (size_t j = 0; j < projected.size(); ++j) {
    KANON_ASSIGN_OR_RETURN(std::vector<size_t> rows,
                           MatchingWorldRows(world, dec, projected.tuple(j)));
    for (size_t r : rows) {
      const size_t i = index_of(world.individual(r));
      graph.AddEdge(j, i);
      witness_row[j].emplace(i, r);
    }
  }

  const Matching matching = LexicographicMaximumMatching(graph);
  const Schema& world_schema = world.relation().schema();
  for (size_t j = 0; j < projected.size(); ++j) {
    RowAssignment assignment;
    assignment.row = j;
    if (matching[j].has_value()) {
      const size_t i = *matching[j];
      const Row& world_row = world.relation().row(witness_row[j].at(i));
      Row values;
      for (const std::string& name : projected.schema().names()) {
        values.push_back(world_row[*world_schema.IndexOf(name)]);
      }
      assignment.individual = ids[i];
      assignment.witness = *Tuple::Create(projected.schema(), values);
      ++out.matched;
    }
    out.assignment.push_back(std::move(assignment));
  }
  out.complete = out.matched == projected.size();
  return out;
}

absl::StatusOr<uint64_t> ChoiceVectorCount(const Table& table,
                                           const DecodingFunction& dec,
                                           const AttributeSet& pattrs) {
  KANON_ASSIGN_OR_RETURN(Table projected, ProjectPublic(table, pattrs));
  uint64_t count = 1;
  for (size_t j = 0; j < projected.size(); ++j) {
    const uint64_t size = DecodedTupleCount(dec, projected.tuple(j));
    if (count > std::numeric_limits<uint64_t>::max() / size) {
      return std::numeric_limits<uint64_t>::max();
    }
    count *= size;
  }
  return count;
}

absl::StatusOr<ConservativeReport> IsConservativelyKAnonymous(
    const Table& table, const DecodingFunction& dec,
    const AttributeSet& pattrs, int64_t k, const ConservativeOptions& options) {
  KANON_RETURN_IF_ERROR(CheckK(k));
  KANON_ASSIGN_OR_RETURN(Table projected, ProjectPublic(table, pattrs));
  ConservativeReport report;
  report.k_requested = k;
  report.pattrs = pattrs;
  if (projected.empty()) {
    report.verdict = true;
    report.degenerate = true;
    return report;
  }
  const std::vector<RowDecoding> decoded = DecodeRows(projected, dec);
  switch (options.method) {
    case ChoiceWorldMethod::kMinimalCover:
      KANON_RETURN_IF_ERROR(MinimalCover(projected, decoded, report));
      break;
    case ChoiceWorldMethod::kEnumerate: {
      KANON_ASSIGN_OR_RETURN(uint64_t vectors,
                             ChoiceVectorCount(table, dec, pattrs));
      if (vectors > options.max_choice_vectors) {
        return absl::ResourceExhaustedError(absl::StrCat(
            "enumeration needs ", vectors, " choice vectors, above the bound "
            "of ", options.max_choice_vectors,
            "; use the minimal-cover method instead"));
      }
      KANON_RETURN_IF_ERROR(Enumerate(projected, dec, decoded,
                                      options.max_choice_vectors, report));
      break;
    }
  }
  return report;
}

bool AnonymityFromConstraints(const std::vector<WorldConstraint>& constraints,
                              const AttributeSet& pattrs, int64_t k) {
  if (pattrs.empty()) return false;
  return std::any_of(constraints.begin(), constraints.end(),
                     [&](const WorldConstraint& c) {
                       return pattrs.IsSubsetOf(c.attributes) &&
                              k <= c.min_count;
                     });
}

}  // namespace kanon
