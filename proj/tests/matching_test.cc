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

#include "kanon/matching.h"

#include <functional>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace kanon {
namespace {

using ::testing::ElementsAre;
using ::testing::Optional;

// Every maximum matching, by exhaustive search, reduced to the smallest
// partner sequence with "unmatched" ordered after every partner.
std::vector<size_t> BruteForceLexFirst(const BipartiteGraph& g) {
  constexpr size_t kNone = std::numeric_limits<size_t>::max();
  std::vector<size_t> current(g.left_size(), kNone);
  std::vector<bool> used(g.right_size(), false);
  std::vector<size_t> best;
  size_t best_size = 0;
  std::function<void(size_t, size_t)> go = [&](size_t l, size_t size) {
    if (l == g.left_size()) {
      if (size > best_size || (size == best_size && current < best) ||
          best.empty()) {
        best = current;
        best_size = size;
      }
      return;
    }
    for (size_t r : g.neighbours(l)) {
      if (used[r]) continue;
      used[r] = true;
      current[l] = r;
      go(l + 1, size + 1);
      used[r] = false;
    }
    current[l] = kNone;
    go(l + 1, size);
  };
  go(0, 0);
  return best;
}

std::vector<size_t> Flatten(const Matching& m) {
  std::vector<size_t> out;
  for (const std::optional<size_t>& p : m) {
    out.push_back(p.value_or(std::numeric_limits<size_t>::max()));
  }
  return out;
}

TEST(MatchingTest, WorkedExampleShape) {
  // Rows 0 and 1 reach individuals {0, 2}; row 2 reaches {1, 3}.
  BipartiteGraph g(3, 4);
  g.AddEdge(0, 0);
  g.AddEdge(0, 2);
  g.AddEdge(1, 0);
  g.AddEdge(1, 2);
  g.AddEdge(2, 1);
  g.AddEdge(2, 3);
  const Matching m = LexicographicMaximumMatching(g);
  EXPECT_THAT(m, ElementsAre(Optional(0u), Optional(2u), Optional(1u)));
}

TEST(MatchingTest, HallViolation) {
  BipartiteGraph g(4, 4);
  for (size_t l = 0; l < 4; ++l) {
    g.AddEdge(l, 0);
    g.AddEdge(l, 2);
  }
  EXPECT_EQ(MatchingSize(MaximumMatching(g)), 2u);
  EXPECT_EQ(MatchingSize(LexicographicMaximumMatching(g)), 2u);
}

TEST(MatchingTest, GreedyChoiceIsRepaired) {
  // Taking 0 for row 0 blocks row 1, so the maximum forces row 0 onto 1.
  BipartiteGraph g(2, 2);
  g.AddEdge(0, 0);
  g.AddEdge(0, 1);
  g.AddEdge(1, 0);
  EXPECT_THAT(LexicographicMaximumMatching(g),
              ElementsAre(Optional(1u), Optional(0u)));
}

TEST(MatchingTest, EmptyGraph) {
  BipartiteGraph g(3, 0);
  const Matching m = LexicographicMaximumMatching(g);
  EXPECT_EQ(m.size(), 3u);
  EXPECT_EQ(MatchingSize(m), 0u);
}

TEST(MatchingPropertyTest, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const size_t left = 1 + rng() % 6;
    const size_t right = rng() % 7;
    BipartiteGraph g(left, right);
    std::vector<std::vector<size_t>> adjacency(left);
    for (size_t l = 0; l < left; ++l) {
      for (size_t r = 0; r < right; ++r) {
        if (rng() % 3 == 0) {
          g.AddEdge(l, r);
          adjacency[l].push_back(r);
        }
      }
    }
    const size_t expected = oracle::BruteForceMatchingSize(adjacency, right);
    const Matching any = MaximumMatching(g);
    const Matching lex = LexicographicMaximumMatching(g);
    EXPECT_EQ(MatchingSize(any), expected);
    EXPECT_EQ(MatchingSize(lex), expected);
    EXPECT_EQ(Flatten(lex), BruteForceLexFirst(g)) << "trial " << trial;

    // Matchings are valid: edges exist and partners are distinct.
    for (const Matching* m : {&any, &lex}) {
      std::set<size_t> partners;
      for (size_t l = 0; l < left; ++l) {
        if (!(*m)[l].has_value()) continue;
        const std::vector<size_t>& n = g.neighbours(l);
        EXPECT_NE(std::find(n.begin(), n.end(), *(*m)[l]), n.end());
        EXPECT_TRUE(partners.insert(*(*m)[l]).second);
      }
    }
  }
}

}  // namespace
}  // namespace kanon
