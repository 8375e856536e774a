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

#include <algorithm>

namespace kanon {
namespace {

class Augmenter {
 public:
  Augmenter(const BipartiteGraph& graph, Matching& match,
            std::vector<std::optional<size_t>>& owner)
      : graph_(graph), match_(match), owner_(owner) {}

  // Looks for an augmenting path from the free left vertex `l`, never
  // re-assigning left vertices below `first_free_row`.
  bool Augment(size_t l, size_t first_free_row) {
    visited_.assign(graph_.right_size(), false);
    return Dfs(l, first_free_row);
  }

 private:
  bool Dfs(size_t l, size_t first_free_row) {
    for (size_t r : graph_.neighbours(l)) {
      if (visited_[r]) continue;
      visited_[r] = true;
      const std::optional<size_t> holder = owner_[r];
      if (holder.has_value() && *holder < first_free_row) continue;
      if (!holder.has_value() || Dfs(*holder, first_free_row)) {
        match_[l] = r;
        owner_[r] = l;
        return true;
      }
    }
    return false;
  }

  const BipartiteGraph& graph_;
  Matching& match_;
  std::vector<std::optional<size_t>>& owner_;
  std::vector<bool> visited_;
};

std::vector<std::optional<size_t>> Owners(const Matching& match,
                                          size_t right) {
  std::vector<std::optional<size_t>> owner(right);
  for (size_t l = 0; l < match.size(); ++l) {
    if (match[l].has_value()) owner[*match[l]] = l;
  }
  return owner;
}

}  // namespace

void BipartiteGraph::AddEdge(size_t l, size_t r) {
  std::vector<size_t>& out = adjacency_[l];
  auto it = std::lower_bound(out.begin(), out.end(), r);
  if (it == out.end() || *it != r) out.insert(it, r);
}

size_t MatchingSize(const Matching& matching) {
  return std::count_if(matching.begin(), matching.end(),
                       [](const auto& m) { return m.has_value(); });
}

Matching MaximumMatching(const BipartiteGraph& graph) {
  Matching match(graph.left_size());
  std::vector<std::optional<size_t>> owner(graph.right_size());
  Augmenter augmenter(graph, match, owner);
  for (size_t l = 0; l < graph.left_size(); ++l) augmenter.Augment(l, 0);
  return match;
}

Matching LexicographicMaximumMatching(const BipartiteGraph& graph) {
  Matching match = MaximumMatching(graph);
  const size_t target = MatchingSize(match);
  std::vector<std::optional<size_t>> owner =
      Owners(match, graph.right_size());

  for (size_t l = 0; l < graph.left_size(); ++l) {
    for (size_t r : graph.neighbours(l)) {
      if (match[l] == r) break;
      const std::optional<size_t> holder = owner[r];
      if (holder.has_value() && *holder < l) continue;

      Matching saved_match = match;
      std::vector<std::optional<size_t>> saved_owner = owner;
      if (match[l].has_value()) owner[*match[l]].reset();
      if (holder.has_value()) match[*holder].reset();
      match[l] = r;
      owner[r] = l;

      // Rows 0..l are now fixed; repair the size among the rest if needed.
      if (MatchingSize(match) < target) {
        Augmenter augmenter(graph, match, owner);
        bool repaired = false;
        for (size_t u = l + 1; u < graph.left_size() && !repaired; ++u) {
          if (!match[u].has_value()) repaired = augmenter.Augment(u, l + 1);
        }
        if (!repaired) {
          match = std::move(saved_match);
          owner = std::move(saved_owner);
          continue;
        }
      }
      break;
    }
  }
  return match;
}

}  // namespace kanon
