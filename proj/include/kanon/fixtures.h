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

// Constructive instances: the two worked examples, the counterexample
// families for subset-based and class-size-based reasoning, and a seeded
// random instance generator for property tests.

#ifndef KANON_FIXTURES_H_
#define KANON_FIXTURES_H_

#include <cstdint>
#include <optional>

#include "absl/status/statusor.h"
#include "kanon/decoding.h"
#include "kanon/relation.h"
#include "kanon/world.h"

namespace kanon {

struct ExampleInstance {
  World world;
  // The published table and its generalized counterpart.
  Table table;
  Table generalized;
  DecodingFunction dec;
};

// World (ID, FirstName, ZIP) with four individuals, table T (ZIP, Disease)
// and table T' (FirstName, Bonus) where J* stands for every J name.
ExampleInstance BuildFigure1();

// Dec(J*) = {Jane}: the decoding under which T' of BuildFigure1() needs no
// class of size three to be conservatively 3-anonymous.
DecodingFunction Figure1NarrowDecoding();

// World (Rid, ID, Name, ZIP) where Rid is the identifier and ID a public copy
// of it, original table T (ID, ZIP, Disease) and T' with ID generalized to
// [Id1-Id2] and [Id3-Id4].
ExampleInstance BuildFigure2();

// The encoding that turns the interval example's T into T'.
EncodingMap Figure2Encoding();

// T = Dom(A_1) x ... x Dom(A_n) with |Dom(A_j)| = k. World row r carries
// a_{j,i,r} for T's r-th tuple (lexicographic order, r = 1..k^n) and
// Dec(a_{j,i}) = {a_{j,i,r} : r = 1..k^n}. Every world value occurs once.
struct Theorem3Instance {
  Table table;
  World world;
  DecodingFunction dec;
  int n = 0;
  int k = 0;
};

absl::StatusOr<Theorem3Instance> BuildTheorem3(int n, int k,
                                               uint64_t max_rows = 4096);

// One general row plus k copies of every specific tuple it decodes to.
struct Theorem5Instance {
  Table table;
  Tuple pivot;
  size_t pivot_row = 0;
  AttributeSet pattrs;
  DecodingFunction dec;
  int64_t k = 0;
};

// Non-public cells of the generated specific rows hold kFiller.
inline constexpr char kFiller[] = "_";

absl::StatusOr<Theorem5Instance> BuildTheorem5(const DecodingFunction& dec,
                                               const AttributeSet& pattrs,
                                               const Tuple& pivot_general,
                                               int64_t k);

// A tuple on `pattrs` with a genuinely general value in one position, or
// nullopt when `dec` has no such value on any attribute of `pattrs`.
std::optional<Tuple> FindGeneralPivot(const DecodingFunction& dec,
                                      const AttributeSet& pattrs);

struct RandomParams {
  size_t world_rows = 8;
  size_t attributes = 3;
  size_t domain_size = 3;
  size_t table_rows = 4;
  // General values per attribute, each decoding to 2..max_decode_size
  // domain values.
  size_t general_values = 2;
  size_t max_decode_size = 3;
  double generalize_probability = 0.5;
  // Use every world attribute as a table attribute.
  bool all_public = false;
};

struct RandomInstance {
  World world;
  Table table;
  DecodingFunction dec;
};

// Deterministic for a given seed. The world has distinct identifiers in
// column "ID" and attributes A1..Am over domains A<j>_<x>; table rows are
// world rows restricted to a random public attribute set (plus a private
// column "S"), globally generalized by a random encoding, so the world is
// consistent with the table.
RandomInstance GenerateRandomInstance(uint64_t seed,
                                      const RandomParams& params = {});

}  // namespace kanon

#endif  // KANON_FIXTURES_H_
