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
#include <cstdint>
#include <map>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "kanon/fixtures.h"
#include "kanon/quasi_id.h"
#include "oracles.h"
#include "test_util.h"

namespace kanon {
namespace {

using ::kanon::testing::MakeTable;
using ::kanon::testing::MakeTuple;
using ::kanon::testing::StatusIs;
using ::testing::ElementsAre;
using ::testing::IsEmpty;
using ::testing::Optional;

std::vector<int64_t> Counts(const std::vector<RowCount>& rows) {
  std::vector<int64_t> out;
  for (const RowCount& rc : rows) out.push_back(rc.count);
  return out;
}

AuditContext Context(const Table& table, const World& world,
                     const DecodingFunction& dec) {
  absl::StatusOr<AuditContext> ctx = AuditContext::Create(table, world, dec);
  EXPECT_TRUE(ctx.ok()) << ctx.status();
  return *std::move(ctx);
}

TEST(IsKAnonymousTest, WorkedExampleTable) {
  const ExampleInstance fig1 = BuildFigure1();
  const AuditContext ctx = Context(fig1.table, fig1.world, fig1.dec);
  EXPECT_EQ(ctx.pattrs(), AttributeSet{"ZIP"});
  ASSERT_OK_AND_ASSIGN(AnonymityReport two, IsKAnonymous(ctx, 2));
  EXPECT_TRUE(two.verdict);
  EXPECT_THAT(Counts(two.per_row), ElementsAre(2, 2, 2));
  EXPECT_THAT(two.min_count, Optional(2));
  EXPECT_THAT(two.witnesses, IsEmpty());

  ASSERT_OK_AND_ASSIGN(AnonymityReport three, IsKAnonymous(ctx, 3));
  EXPECT_FALSE(three.verdict);
  EXPECT_THAT(three.witnesses, ElementsAre(0, 1, 2));
}

TEST(IsKAnonymousTest, WorkedExampleGeneralizedTable) {
  const ExampleInstance fig1 = BuildFigure1();
  const AuditContext ctx = Context(fig1.generalized, fig1.world, fig1.dec);
  ASSERT_OK_AND_ASSIGN(AnonymityReport r, IsKAnonymous(ctx, 2));
  EXPECT_TRUE(r.verdict);
  EXPECT_THAT(Counts(r.per_row), ElementsAre(4, 4, 2));
}

TEST(IsKAnonymousTest, IntervalIdsGeneralizedTable) {
  const ExampleInstance fig2 = BuildFigure2();
  const AuditContext ctx = Context(fig2.generalized, fig2.world, fig2.dec);
  EXPECT_EQ(ctx.pattrs(), (AttributeSet{"ID", "ZIP"}));
  ASSERT_OK_AND_ASSIGN(AnonymityReport r, IsKAnonymous(ctx, 2));
  EXPECT_FALSE(r.verdict);
  EXPECT_THAT(Counts(r.per_row), ElementsAre(1, 1, 1, 1));
}

TEST(IsKAnonymousTest, ArgumentErrors) {
  const ExampleInstance fig1 = BuildFigure1();
  const AuditContext ctx = Context(fig1.table, fig1.world, fig1.dec);
  EXPECT_THAT(IsKAnonymous(ctx, 1).status(),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(AuditContext::Create(MakeTable({"Disease"}, {{"D1"}}),
                                   fig1.world, fig1.dec)
                  .status(),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(IsKAnonymousTest, InconsistentRowsAreReportedNotFatal) {
  const ExampleInstance fig1 = BuildFigure1();
  const Table t = MakeTable({"ZIP"}, {{"20033"}, {"11111"}});
  const AuditContext ctx = Context(t, fig1.world, fig1.dec);
  ASSERT_OK_AND_ASSIGN(AnonymityReport r, IsKAnonymous(ctx, 2));
  EXPECT_FALSE(r.verdict);
  EXPECT_THAT(r.consistency_violations, ElementsAre(1));
  ASSERT_OK_AND_ASSIGN(AnonymityLevel level, GetAnonymityLevel(ctx));
  EXPECT_THAT(level.level, Optional(0));
  EXPECT_THAT(level.violating_rows, ElementsAre(1));
}

TEST(IsKAnonymousTest, EmptyTableIsVacuousAndDegenerate) {
  const ExampleInstance fig1 = BuildFigure1();
  const AuditContext ctx = Context(MakeTable({"ZIP"}, {}), fig1.world, fig1.dec);
  ASSERT_OK_AND_ASSIGN(AnonymityReport r, IsKAnonymous(ctx, 5));
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(r.degenerate);
}

TEST(AnonymityLevelTest, Examples) {
  const ExampleInstance fig1 = BuildFigure1();
  ASSERT_OK_AND_ASSIGN(AnonymityLevel t,
                       GetAnonymityLevel(Context(fig1.table, fig1.world,
                                                 fig1.dec)));
  EXPECT_THAT(t.level, Optional(2));
  ASSERT_OK_AND_ASSIGN(AnonymityLevel tp,
                       GetAnonymityLevel(Context(fig1.generalized, fig1.world,
                                                 fig1.dec)));
  EXPECT_THAT(tp.level, Optional(2));
  ASSERT_OK_AND_ASSIGN(
      AnonymityLevel all,
      GetAnonymityLevel(Context(MakeTable({"FirstName"}, {{"J*"}}), fig1.world,
                                fig1.dec)));
  EXPECT_THAT(all.level, Optional(4));
}

TEST(RestrictedContextTest, NarrowsOnly) {
  const ExampleInstance fig2 = BuildFigure2();
  const AuditContext ctx = Context(fig2.generalized, fig2.world, fig2.dec);
  ASSERT_OK_AND_ASSIGN(AuditContext zip, ctx.RestrictedTo(AttributeSet{"ZIP"}));
  EXPECT_TRUE(zip.restricted());
  ASSERT_OK_AND_ASSIGN(AnonymityReport r, IsKAnonymous(zip, 2));
  EXPECT_TRUE(r.verdict);
  EXPECT_FALSE(ctx.RestrictedTo(AttributeSet{"Name"}).ok());
  EXPECT_FALSE(ctx.RestrictedTo(AttributeSet{}).ok());
}

TEST(ClassSizeTest, Examples) {
  const Table same = MakeTable({"A"}, {{"x"}, {"x"}, {"x"}, {"x"}});
  ASSERT_OK_AND_ASSIGN(bool four,
                       SatisfiesClassSizeCondition(same, AttributeSet{"A"}, 4));
  EXPECT_TRUE(four);
  const ExampleInstance fig1 = BuildFigure1();
  ASSERT_OK_AND_ASSIGN(bool zip, SatisfiesClassSizeCondition(
                                     fig1.table, AttributeSet{"ZIP"}, 2));
  EXPECT_FALSE(zip);
  EXPECT_FALSE(SatisfiesClassSizeCondition(same, AttributeSet{"A"}, 1).ok());
  EXPECT_FALSE(SatisfiesClassSizeCondition(same, AttributeSet{"B"}, 2).ok());
}

TEST(IndividualizedConsistencyTest, WorkedExample) {
  const ExampleInstance fig1 = BuildFigure1();
  ASSERT_OK_AND_ASSIGN(
      ConsistencyMatching m,
      IsIndividualizedConsistent(fig1.world, fig1.table, fig1.dec));
  EXPECT_TRUE(m.complete);
  ASSERT_EQ(m.assignment.size(), 3u);
  EXPECT_THAT(m.assignment[0].individual, Optional(std::string("Id1")));
  EXPECT_THAT(m.assignment[1].individual, Optional(std::string("Id3")));
  EXPECT_THAT(m.assignment[2].individual, Optional(std::string("Id2")));
  for (const RowAssignment& a : m.assignment) {
    ASSERT_TRUE(a.witness.has_value());
    ASSERT_OK_AND_ASSIGN(Tuple row, fig1.table.tuple(a.row).Restrict(m.pattrs));
    EXPECT_TRUE(TupleInDecoding(fig1.dec, row, *a.witness));
  }
}

TEST(IndividualizedConsistencyTest, HallViolation) {
  const ExampleInstance fig1 = BuildFigure1();
  const Table t =
      MakeTable({"ZIP"}, {{"20033"}, {"20033"}, {"20033"}, {"20033"}});
  ASSERT_OK_AND_ASSIGN(ConsistencyMatching m,
                       IsIndividualizedConsistent(fig1.world, t, fig1.dec));
  EXPECT_FALSE(m.complete);
  EXPECT_EQ(m.matched, 2u);
}

TEST(IndividualizedConsistencyTest, SingleRow) {
  const ExampleInstance fig1 = BuildFigure1();
  const Table t = MakeTable({"FirstName", "ZIP"}, {{"Jeanne", "20034"}});
  ASSERT_OK_AND_ASSIGN(ConsistencyMatching m,
                       IsIndividualizedConsistent(fig1.world, t, fig1.dec));
  EXPECT_TRUE(m.complete);
  EXPECT_THAT(m.assignment[0].individual, Optional(std::string("Id2")));
}

TEST(ConservativeTest, NarrowDecodingWorkedExample) {
  const ExampleInstance fig1 = BuildFigure1();
  ASSERT_OK_AND_ASSIGN(
      ConservativeReport r,
      IsConservativelyKAnonymous(fig1.generalized, Figure1NarrowDecoding(),
                                 AttributeSet{"FirstName"}, 3));
  EXPECT_TRUE(r.verdict);
}

TEST(ConservativeTest, WideDecodingWorkedExampleFails) {
  const ExampleInstance fig1 = BuildFigure1();
  ASSERT_OK_AND_ASSIGN(
      ConservativeReport r,
      IsConservativelyKAnonymous(fig1.generalized, fig1.dec,
                                 AttributeSet{"FirstName"}, 2));
  EXPECT_FALSE(r.verdict);
  // The counterexample is a choice vector inside the table's decoding.
  ASSERT_EQ(r.counterexample.size(), fig1.generalized.size());
  for (size_t j = 0; j < r.counterexample.size(); ++j) {
    ASSERT_OK_AND_ASSIGN(
        Tuple row, fig1.generalized.tuple(j).Restrict(AttributeSet{"FirstName"}));
    EXPECT_TRUE(TupleInDecoding(fig1.dec, row, r.counterexample[j]));
  }
}

TEST(ConservativeTest, ProductTableTableFails) {
  ASSERT_OK_AND_ASSIGN(Theorem3Instance inst, BuildTheorem3(2, 2));
  ASSERT_OK_AND_ASSIGN(
      ConservativeReport r,
      IsConservativelyKAnonymous(inst.table, inst.dec, inst.table.attributes(),
                                 2));
  EXPECT_FALSE(r.verdict);
  EXPECT_THAT(Counts(r.per_row), ElementsAre(1, 1, 1, 1));
}

TEST(ConservativeTest, GeneralPivotFixture) {
  const ExampleInstance fig1 = BuildFigure1();
  ASSERT_OK_AND_ASSIGN(
      Theorem5Instance inst,
      BuildTheorem5(fig1.dec, AttributeSet{"FirstName"},
                    MakeTuple({{"FirstName", "J*"}}), 2));
  ASSERT_OK_AND_ASSIGN(bool classes, SatisfiesClassSizeCondition(
                                         inst.table, inst.pattrs, 2));
  EXPECT_FALSE(classes);
  ASSERT_OK_AND_ASSIGN(
      ConservativeReport r,
      IsConservativelyKAnonymous(inst.table, inst.dec, inst.pattrs, 2));
  EXPECT_TRUE(r.verdict);
  EXPECT_GE(r.per_row[inst.pivot_row].count, 2);
}

TEST(ConservativeTest, EnumerationGuard) {
  ASSERT_OK_AND_ASSIGN(Theorem3Instance inst, BuildTheorem3(2, 2));
  ConservativeOptions options;
  options.method = ChoiceWorldMethod::kEnumerate;
  options.max_choice_vectors = 1000;
  EXPECT_THAT(IsConservativelyKAnonymous(inst.table, inst.dec,
                                         inst.table.attributes(), 2, options)
                  .status(),
              StatusIs(absl::StatusCode::kResourceExhausted));
  ASSERT_OK_AND_ASSIGN(uint64_t vectors,
                       ChoiceVectorCount(inst.table, inst.dec,
                                         inst.table.attributes()));
  EXPECT_EQ(vectors, 65536u);
}

TEST(ConservativeTest, ArgumentErrors) {
  const ExampleInstance fig1 = BuildFigure1();
  EXPECT_FALSE(IsConservativelyKAnonymous(fig1.table, fig1.dec,
                                          AttributeSet{"ZIP"}, 1)
                   .ok());
  EXPECT_FALSE(
      IsConservativelyKAnonymous(fig1.table, fig1.dec, AttributeSet{}, 2).ok());
  EXPECT_FALSE(IsConservativelyKAnonymous(fig1.table, fig1.dec,
                                          AttributeSet{"Age"}, 2)
                   .ok());
}

TEST(ConstraintsTest, Examples) {
  const std::vector<WorldConstraint> c = {{AttributeSet{"ZIP", "Gender"}, 500}};
  EXPECT_TRUE(AnonymityFromConstraints(c, AttributeSet{"ZIP"}, 300));
  EXPECT_TRUE(AnonymityFromConstraints(c, AttributeSet{"ZIP"}, 500));
  EXPECT_FALSE(AnonymityFromConstraints(c, AttributeSet{"ZIP"}, 501));
  EXPECT_FALSE(AnonymityFromConstraints(c, AttributeSet{"ZIP", "Age"}, 2));
  for (int64_t k = 2; k < 10; ++k) {
    EXPECT_FALSE(AnonymityFromConstraints({}, AttributeSet{"ZIP"}, k));
  }
}

TEST(AnonymityPropertyTest, CountsMatchOracleAndVerdictFollowsMinimum) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const RandomInstance inst = GenerateRandomInstance(seed);
    const AuditContext ctx = Context(inst.table, inst.world, inst.dec);
    const std::vector<int64_t> expected =
        oracle::NaiveCounts(inst.world, inst.dec, inst.table, ctx.pattrs());
    bool previous = true;
    for (int64_t k = 2; k <= 6; ++k) {
      ASSERT_OK_AND_ASSIGN(AnonymityReport r, IsKAnonymous(ctx, k));
      EXPECT_EQ(Counts(r.per_row), expected) << "seed " << seed;
      const int64_t min = *std::min_element(expected.begin(), expected.end());
      EXPECT_EQ(r.verdict, min >= k);
      for (size_t w : r.witnesses) EXPECT_LT(expected[w], k);
      // Monotone in k.
      if (!previous) EXPECT_FALSE(r.verdict);
      previous = r.verdict;
    }
  }
}

TEST(AnonymityPropertyTest, QiLevelBoundsAnonymity) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const RandomInstance inst = GenerateRandomInstance(seed);
    const AuditContext ctx = Context(inst.table, inst.world, inst.dec);
    ASSERT_OK_AND_ASSIGN(QiLevel level, GetQiLevel(inst.world, ctx.pattrs()));
    ASSERT_OK_AND_ASSIGN(bool consistent,
                         IsConsistent(inst.world, inst.table, inst.dec));
    ASSERT_TRUE(consistent);
    for (int64_t k = 2; k <= *level.level; ++k) {
      ASSERT_OK_AND_ASSIGN(AnonymityReport r, IsKAnonymous(ctx, k));
      EXPECT_TRUE(r.verdict) << "seed " << seed << " k " << k;
    }
  }
}

TEST(AnonymityPropertyTest, ClassSizeImpliesConservative) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const RandomInstance inst = GenerateRandomInstance(seed);
    const AttributeSet pattrs = PublicAttributes(inst.world, inst.table);
    for (int64_t k = 2; k <= 3; ++k) {
      ASSERT_OK_AND_ASSIGN(bool classes,
                           SatisfiesClassSizeCondition(inst.table, pattrs, k));
      if (!classes) continue;
      ASSERT_OK_AND_ASSIGN(
          ConservativeReport r,
          IsConservativelyKAnonymous(inst.table, inst.dec, pattrs, k));
      EXPECT_TRUE(r.verdict);
    }
  }
}

TEST(AnonymityPropertyTest, MinimalCoverAgreesWithEnumeration) {
  ConservativeOptions enumerate;
  enumerate.method = ChoiceWorldMethod::kEnumerate;
  size_t compared = 0;
  for (uint64_t seed = 0; seed < 300; ++seed) {
    RandomParams params;
    params.table_rows = 1 + seed % 5;
    const RandomInstance inst = GenerateRandomInstance(seed, params);
    const AttributeSet pattrs = PublicAttributes(inst.world, inst.table);
    ASSERT_OK_AND_ASSIGN(uint64_t vectors,
                         ChoiceVectorCount(inst.table, inst.dec, pattrs));
    if (vectors > 100000) continue;
    for (int64_t k = 2; k <= 3; ++k) {
      ASSERT_OK_AND_ASSIGN(
          ConservativeReport fast,
          IsConservativelyKAnonymous(inst.table, inst.dec, pattrs, k));
      ASSERT_OK_AND_ASSIGN(
          ConservativeReport slow,
          IsConservativelyKAnonymous(inst.table, inst.dec, pattrs, k,
                                     enumerate));
      EXPECT_EQ(fast.verdict, slow.verdict) << "seed " << seed;
      EXPECT_EQ(Counts(fast.per_row), Counts(slow.per_row)) << "seed " << seed;
      ++compared;
    }
  }
  EXPECT_GT(compared, 100u);
}

TEST(AnonymityPropertyTest, ConservativeVerdictHoldsOnMatchedWorlds) {
  // A conservatively k-anonymous table is k-anonymous against any world it
  // is individualized consistent with.
  size_t checked = 0;
  for (uint64_t seed = 0; seed < 300; ++seed) {
    RandomParams params;
    params.world_rows = 6;
    params.table_rows = 3;
    const RandomInstance inst = GenerateRandomInstance(seed, params);
    const AttributeSet pattrs = PublicAttributes(inst.world, inst.table);
    ASSERT_OK_AND_ASSIGN(ConsistencyMatching m,
                         IsIndividualizedConsistent(inst.world, inst.table,
                                                    inst.dec));
    if (!m.complete) continue;
    const AuditContext ctx = Context(inst.table, inst.world, inst.dec);
    for (int64_t k = 2; k <= 3; ++k) {
      ASSERT_OK_AND_ASSIGN(
          ConservativeReport c,
          IsConservativelyKAnonymous(inst.table, inst.dec, pattrs, k));
      if (!c.verdict) continue;
      ASSERT_OK_AND_ASSIGN(AnonymityReport r, IsKAnonymous(ctx, k));
      EXPECT_TRUE(r.verdict) << "seed " << seed;
      ++checked;
    }
  }
  EXPECT_GT(checked, 0u);
}

}  // namespace
}  // namespace kanon
