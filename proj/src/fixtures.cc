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

#include "kanon/fixtures.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "kanon/status_macros.h"

namespace kanon {
namespace {

// Fixed fixtures are valid by construction.
template <typename T>
T Must(absl::StatusOr<T> value) {
  if (!value.ok()) {
    std::fprintf(stderr, "fixture construction failed: %s\n",
                 value.status().ToString().c_str());
    std::abort();
  }
  return *std::move(value);
}

void Must(const absl::Status& status) {
  if (!status.ok()) {
    std::fprintf(stderr, "fixture construction failed: %s\n",
                 status.ToString().c_str());
    std::abort();
  }
}

World Figure1World() {
  return Must(World::Create(Must(Table::FromRows({"ID", "FirstName", "ZIP"},
                                                 {{"Id1", "John", "20033"},
                                                  {"Id2", "Jeanne", "20034"},
                                                  {"Id3", "Jane", "20033"},
                                                  {"Id4", "Jane", "20034"}})),
                            "ID"));
}

}  // namespace

ExampleInstance BuildFigure1() {
  DecodingFunction::Builder builder;
  Must(builder.DeclareDomain("FirstName", {"John", "Jeanne", "Jane"}));
  Must(builder.AddPrefixRule("FirstName", "J*"));
  return ExampleInstance{
      Figure1World(),
      Must(Table::FromRows({"ZIP", "Disease"}, {{"20033", "D1"},
                                                {"20033", "D2"},
                                                {"20034", "D3"}})),
      Must(Table::FromRows({"FirstName", "Bonus"}, {{"J*", "$10K"},
                                                    {"J*", "$100K"},
                                                    {"Jane", "$20K"}})),
      Must(std::move(builder).Build())};
}

DecodingFunction Figure1NarrowDecoding() {
  DecodingFunction::Builder builder;
  Must(builder.AddExplicitRule("FirstName", "J*", {"Jane"}));
  Must(builder.AddExplicitRule("FirstName", "Jane", {"Jane"}));
  return Must(std::move(builder).Build());
}

ExampleInstance BuildFigure2() {
  DecodingFunction::Builder builder;
  Must(builder.AddExplicitRule("ID", "[Id1-Id2]", {"Id1", "Id2"}));
  Must(builder.AddExplicitRule("ID", "[Id3-Id4]", {"Id3", "Id4"}));
  World world = Must(World::Create(
      Must(Table::FromRows({"Rid", "ID", "Name", "ZIP"},
                           {{"Id1", "Id1", "John", "20033"},
                            {"Id2", "Id2", "Jeanne", "20034"},
                            {"Id3", "Id3", "Jane", "20033"},
                            {"Id4", "Id4", "Jane", "20034"}})),
      "Rid"));
  return ExampleInstance{
      std::move(world),
      Must(Table::FromRows({"ID", "ZIP", "Disease"},
                           {{"Id1", "20033", "D1"},
                            {"Id2", "20034", "D2"},
                            {"Id3", "20033", "D3"},
                            {"Id4", "20034", "D4"}})),
      Must(Table::FromRows({"ID", "ZIP", "Disease"},
                           {{"[Id1-Id2]", "20033", "D1"},
                            {"[Id1-Id2]", "20034", "D2"},
                            {"[Id3-Id4]", "20033", "D3"},
                            {"[Id3-Id4]", "20034", "D4"}})),
      Must(std::move(builder).Build())};
}

EncodingMap Figure2Encoding() {
  return Must(EncodingMap::Create({{"ID",
                                    {{"Id1", "[Id1-Id2]"},
                                     {"Id2", "[Id1-Id2]"},
                                     {"Id3", "[Id3-Id4]"},
                                     {"Id4", "[Id3-Id4]"}}}},
                                  BuildFigure2().dec));
}

absl::StatusOr<Theorem3Instance> BuildTheorem3(int n, int k,
                                               uint64_t max_rows) {
  if (n < 2 || k < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("construction needs n >= 2 and k >= 2, got n=", n,
                     " k=", k));
  }
  uint64_t rows = 1;
  for (int j = 0; j < n; ++j) {
    rows *= static_cast<uint64_t>(k);
    if (rows > max_rows) {
      return absl::ResourceExhaustedError(absl::StrCat(
          "k^n = ", k, "^", n, " exceeds the bound of ", max_rows, " rows"));
    }
  }

  std::vector<std::string> header;
  for (int j = 1; j <= n; ++j) header.push_back(absl::StrCat("A", j));
  std::vector<std::string> world_header = header;
  world_header.push_back("ID");

  auto value = [](int j, int i) { return absl::StrCat("a_", j, "_", i); };

  std::vector<Row> table_rows;
  std::vector<Row> world_rows;
  std::vector<int> index(n, 1);  // i_1..i_n, 1-based
  for (uint64_t r = 1; r <= rows; ++r) {
    Row t;
    Row w;
    for (int j = 0; j < n; ++j) {
      t.push_back(value(j + 1, index[j]));
      w.push_back(absl::StrCat(value(j + 1, index[j]), "_", r));
    }
    w.push_back(absl::StrCat(r));
    table_rows.push_back(std::move(t));
    world_rows.push_back(std::move(w));
    for (int j = n - 1; j >= 0; --j) {
      if (++index[j] <= k) break;
      index[j] = 1;
    }
  }

  DecodingFunction::Builder builder;
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= k; ++i) {
      std::vector<Value> decoded;
      for (uint64_t r = 1; r <= rows; ++r) {
        decoded.push_back(absl::StrCat(value(j, i), "_", r));
      }
      KANON_RETURN_IF_ERROR(builder.AddExplicitRule(
          absl::StrCat("A", j), value(j, i), std::move(decoded)));
    }
  }

  Theorem3Instance out;
  KANON_ASSIGN_OR_RETURN(out.table, Table::FromRows(header, table_rows));
  KANON_ASSIGN_OR_RETURN(Table relation,
                         Table::FromRows(world_header, world_rows));
  KANON_ASSIGN_OR_RETURN(out.world, World::Create(std::move(relation), "ID"));
  KANON_ASSIGN_OR_RETURN(out.dec, std::move(builder).Build());
  out.n = n;
  out.k = k;
  return out;
}

absl::StatusOr<Theorem5Instance> BuildTheorem5(const DecodingFunction& dec,
                                               const AttributeSet& pattrs,
                                               const Tuple& pivot_general,
                                               int64_t k) {
  if (k < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("k must be at least 2, got ", k));
  }
  if (pattrs.empty()) {
    return absl::InvalidArgumentError("public attributes must be non-empty");
  }
  KANON_ASSIGN_OR_RETURN(Tuple pivot_public, pivot_general.Restrict(pattrs));
  if (pivot_public.size() != pattrs.size()) {
    return absl::InvalidArgumentError("pivot does not cover every public "
                                      "attribute");
  }
  if (DecodedTupleCount(dec, pivot_public) < 2 ||
      TupleInDecoding(dec, pivot_public, pivot_public)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "pivot ", pivot_public.ToString(),
        " must decode to several tuples, none equal to itself"));
  }
  KANON_ASSIGN_OR_RETURN(std::vector<Tuple> decoded,
                         DecodeTuple(dec, pivot_public));

  const Schema& schema = pivot_general.schema();
  std::vector<Row> rows = {pivot_general.values()};
  for (const Tuple& d : decoded) {
    Row row(schema.size(), kFiller);
    for (size_t c = 0; c < d.size(); ++c) {
      row[*schema.IndexOf(d.schema().name(c))] = d.value(c);
    }
    for (int64_t copy = 0; copy < k; ++copy) rows.push_back(row);
  }

  Theorem5Instance out;
  KANON_ASSIGN_OR_RETURN(out.table, Table::Create(schema, std::move(rows)));
  out.pivot = pivot_general;
  out.pivot_row = 0;
  out.pattrs = pattrs;
  out.dec = dec;
  out.k = k;
  return out;
}

std::optional<Tuple> FindGeneralPivot(const DecodingFunction& dec,
                                      const AttributeSet& pattrs) {
  const std::vector<DecodingRule> rules = dec.rules();
  for (const DecodingRule& rule : rules) {
    if (!pattrs.Contains(rule.attribute) ||
        !dec.IsGeneral(rule.attribute, rule.general) ||
        rule.decoded.size() < 2) {
      continue;
    }
    std::vector<std::pair<std::string, Value>> cells;
    for (const std::string& name : pattrs) {
      if (name == rule.attribute) {
        cells.emplace_back(name, rule.general);
      } else {
        const std::vector<Value>* domain = dec.Domain(name);
        cells.emplace_back(name, domain != nullptr ? domain->front()
                                                   : std::string(kFiller));
      }
    }
    return *Tuple::FromPairs(std::move(cells));
  }
  return std::nullopt;
}

RandomInstance GenerateRandomInstance(uint64_t seed,
                                      const RandomParams& params) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](size_t lo, size_t hi) {
    return std::uniform_int_distribution<size_t>(lo, hi)(rng);
  };
  std::bernoulli_distribution generalize(params.generalize_probability);

  const size_t m = std::max<size_t>(1, params.attributes);
  const size_t d = std::max<size_t>(1, params.domain_size);
  std::vector<std::string> attributes;
  std::vector<std::vector<Value>> domains(m);
  for (size_t j = 0; j < m; ++j) {
    attributes.push_back(absl::StrCat("A", j + 1));
    for (size_t x = 0; x < d; ++x) {
      domains[j].push_back(absl::StrCat(attributes[j], "_", x));
    }
  }

  // World.
  std::vector<std::string> world_header = attributes;
  world_header.push_back("ID");
  std::vector<Row> world_rows;
  for (size_t r = 0; r < params.world_rows; ++r) {
    Row row;
    for (size_t j = 0; j < m; ++j) row.push_back(domains[j][uniform(0, d - 1)]);
    row.push_back(absl::StrCat("p", r + 1));
    world_rows.push_back(std::move(row));
  }

  // Decoding: every domain declared, a few general values per attribute.
  DecodingFunction::Builder builder;
  std::vector<std::vector<std::pair<Value, std::vector<Value>>>> generals(m);
  for (size_t j = 0; j < m; ++j) {
    Must(builder.DeclareDomain(attributes[j], domains[j]));
    if (d < 2) continue;
    for (size_t g = 0; g < params.general_values; ++g) {
      const size_t size =
          uniform(2, std::max<size_t>(2, std::min(params.max_decode_size, d)));
      std::vector<Value> pool = domains[j];
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(size);
      std::sort(pool.begin(), pool.end());
      Value literal = absl::StrCat(attributes[j], "_g", g);
      Must(builder.AddExplicitRule(attributes[j], literal, pool));
      generals[j].emplace_back(std::move(literal), std::move(pool));
    }
  }
  DecodingFunction dec = Must(std::move(builder).Build());

  // Table: sampled world rows on a random public attribute set.
  std::vector<size_t> public_columns;
  if (params.all_public) {
    for (size_t j = 0; j < m; ++j) public_columns.push_back(j);
  } else {
    while (public_columns.empty()) {
      for (size_t j = 0; j < m; ++j) {
        if (uniform(0, 1) == 1) public_columns.push_back(j);
      }
    }
  }
  std::vector<std::string> header;
  for (size_t j : public_columns) header.push_back(attributes[j]);
  header.push_back("S");
  std::vector<Row> table_rows;
  if (!world_rows.empty()) {
    for (size_t i = 0; i < params.table_rows; ++i) {
      const Row& source = world_rows[uniform(0, world_rows.size() - 1)];
      Row row;
      for (size_t j : public_columns) row.push_back(source[j]);
      row.push_back(absl::StrCat("s", i));
      table_rows.push_back(std::move(row));
    }
  }
  Table specific = Must(Table::FromRows(header, table_rows));

  EncodingMap::Mapping mapping;
  for (size_t j : public_columns) {
    for (const Value& v : domains[j]) {
      if (!generalize(rng)) continue;
      std::vector<const Value*> covering;
      for (const auto& [literal, decoded] : generals[j]) {
        if (std::binary_search(decoded.begin(), decoded.end(), v)) {
          covering.push_back(&literal);
        }
      }
      if (covering.empty()) continue;
      mapping[attributes[j]][v] = *covering[uniform(0, covering.size() - 1)];
    }
  }
  EncodingMap enc = Must(EncodingMap::Create(std::move(mapping), dec));

  RandomInstance out;
  out.world = Must(World::Create(Must(Table::FromRows(world_header,
                                                      std::move(world_rows))),
                                 "ID"));
  out.table = Must(ApplyEncoding(specific, enc, UnmappedValues::kKeep));
  out.dec = std::move(dec);
  return out;
}

}  // namespace kanon
