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

#include <cstdint>
#include <map>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "kanon/anonymity.h"
#include "kanon/quasi_id.h"
#include "oracles.h"
#include "test_util.h"

namespace kanon {
namespace {

using ::kanon::testing::MakeTuple;
using ::kanon::testing::StatusIs;
using ::testing::ElementsAre;
using ::testing::Optional;

TEST(WorkedExampleTest, Contents) {
  const ExampleInstance fig1 = BuildFigure1();
  EXPECT_THAT(fig1.world.relation().schema().names(),
              ElementsAre("ID", "FirstName", "ZIP"));
  EXPECT_THAT(fig1.world.relation().rows(),
              ElementsAre(Row{"Id1", "John", "20033"},
                          Row{"Id2", "Jeanne", "20034"},
                          Row{"Id3", "Jane", "20033"},
                          Row{"Id4", "Jane", "20034"}));
  EXPECT_THAT(fig1.table.rows(),
              ElementsAre(Row{"20033", "D1"}, Row{"20033", "D2"},
                          Row{"20034", "D3"}));
  EXPECT_THAT(fig1.generalized.rows(),
              ElementsAre(Row{"J*", "$10K"}, Row{"J*", "$100K"},
                          Row{"Jane", "$20K"}));
}

TEST(IntervalIdsTest, Verdicts) {
  const ExampleInstance fig2 = BuildFigure2();
  ASSERT_OK_AND_ASSIGN(AuditContext ctx,
                       AuditContext::Create(fig2.generalized, fig2.world,
                                            fig2.dec));
  ASSERT_OK_AND_ASSIGN(AnonymityReport r, IsKAnonymous(ctx, 2));
  EXPECT_FALSE(r.verdict);
  ASSERT_OK_AND_ASSIGN(QiLevel id, GetQiLevel(fig2.world, AttributeSet{"ID"}));
  EXPECT_THAT(id.level, Optional(1));
  ASSERT_OK_AND_ASSIGN(QiLevel zip, GetQiLevel(fig2.world, AttributeSet{"ZIP"}));
  EXPECT_THAT(zip.level, Optional(2));
}

TEST(ProductTableTest, Shape) {
  ASSERT_OK_AND_ASSIGN(Theorem3Instance inst, BuildTheorem3(2, 2));
  EXPECT_EQ(inst.table.size(), 4u);
  EXPECT_EQ(inst.world.num_rows(), 4u);
  // Every world value outside the id column occurs once.
  std::map<Value, int> seen;
  for (const Row& row : inst.world.relation().rows()) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c != inst.world.id_column()) ++seen[row[c]];
    }
  }
  for (const auto& [v, n] : seen) EXPECT_EQ(n, 1) << v;
  EXPECT_THAT(inst.dec.Decode("A1", "a_1_1"),
              ElementsAre("a_1_1_1", "a_1_1_2", "a_1_1_3", "a_1_1_4"));
  EXPECT_THAT(inst.world.relation().row(0),
              ElementsAre("a_1_1_1", "a_2_1_1", "1"));
}

TEST(ProductTableTest, Bounds) {
  EXPECT_FALSE(BuildTheorem3(1, 2).ok());
  EXPECT_FALSE(BuildTheorem3(2, 1).ok());
  EXPECT_THAT(BuildTheorem3(10, 10).status(),
              StatusIs(absl::StatusCode::kResourceExhausted));
}

TEST(ProductTableTest, ProjectionCounts) {
  ASSERT_OK_AND_ASSIGN(Theorem3Instance inst, BuildTheorem3(2, 2));
  ASSERT_OK_AND_ASSIGN(AuditContext ctx,
                       AuditContext::Create(inst.table, inst.world, inst.dec));
  ASSERT_OK_AND_ASSIGN(AnonymityReport full, IsKAnonymous(ctx, 2));
  EXPECT_FALSE(full.verdict);
  ASSERT_OK_AND_ASSIGN(AuditContext a1, ctx.RestrictedTo(AttributeSet{"A1"}));
  ASSERT_OK_AND_ASSIGN(AnonymityReport part, IsKAnonymous(a1, 2));
  EXPECT_TRUE(part.verdict);
  for (const RowCount& rc : part.per_row) EXPECT_EQ(rc.count, 2);
}

TEST(GeneralPivotTest, TwoValueDecoder) {
  DecodingFunction::Builder b;
  ASSERT_OK(b.AddExplicitRule("A", "g", {"a", "b"}));
  ASSERT_OK_AND_ASSIGN(DecodingFunction dec, std::move(b).Build());
  ASSERT_OK_AND_ASSIGN(Theorem5Instance inst,
                       BuildTheorem5(dec, AttributeSet{"A"},
                                     MakeTuple({{"A", "g"}}), 2));
  EXPECT_THAT(inst.table.rows(), ElementsAre(Row{"g"}, Row{"a"}, Row{"a"},
                                             Row{"b"}, Row{"b"}));
  EXPECT_EQ(inst.pivot_row, 0u);
}

TEST(GeneralPivotTest, RejectsDegeneratePivot) {
  DecodingFunction::Builder b;
  ASSERT_OK(b.AddExplicitRule("A", "g", {"a"}));
  ASSERT_OK_AND_ASSIGN(DecodingFunction dec, std::move(b).Build());
  EXPECT_FALSE(BuildTheorem5(dec, AttributeSet{"A"}, MakeTuple({{"A", "g"}}), 2)
                   .ok());
  EXPECT_FALSE(BuildTheorem5(dec, AttributeSet{"A"}, MakeTuple({{"A", "a"}}), 2)
                   .ok());
}

TEST(GeneralPivotTest, NonPublicColumnsAreFiller) {
  const ExampleInstance fig1 = BuildFigure1();
  ASSERT_OK_AND_ASSIGN(
      Theorem5Instance inst,
      BuildTheorem5(fig1.dec, AttributeSet{"FirstName"},
                    MakeTuple({{"FirstName", "J*"}, {"Bonus", "$1"}}), 3));
  EXPECT_EQ(inst.table.size(), 1u + 3u * 3u);
  const size_t bonus = *inst.table.schema().IndexOf("Bonus");
  for (size_t r = 1; r < inst.table.size(); ++r) {
    EXPECT_EQ(inst.table.row(r)[bonus], kFiller);
  }
}

TEST(RandomInstanceTest, DeterministicAndConsistent) {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const RandomInstance a = GenerateRandomInstance(seed);
    const RandomInstance b = GenerateRandomInstance(seed);
    EXPECT_EQ(a.world.relation(), b.world.relation());
    EXPECT_EQ(a.table, b.table);
    EXPECT_EQ(a.dec.rules().size(), b.dec.rules().size());
    ASSERT_OK_AND_ASSIGN(bool consistent, IsConsistent(a.world, a.table, a.dec));
    EXPECT_TRUE(consistent) << "seed " << seed;
    EXPECT_EQ(a.world.Individuals().size(), a.world.num_rows());
  }
}

}  // namespace
}  // namespace kanon
