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

#ifndef KANON_MATCHING_H_
#define KANON_MATCHING_H_

#include <cstddef>
#include <optional>
#include <vector>

namespace kanon {

// Bipartite graph with left vertices [0, left) and right vertices [0, right).
class BipartiteGraph {
 public:
  BipartiteGraph(size_t left, size_t right) : adjacency_(left), right_(right) {}

  void AddEdge(size_t l, size_t r);

  size_t left_size() const { return adjacency_.size(); }
  size_t right_size() const { return right_; }
  // Neighbours of `l` in increasing order.
  const std::vector<size_t>& neighbours(size_t l) const {
    return adjacency_[l];
  }

 private:
  std::vector<std::vector<size_t>> adjacency_;
  size_t right_;
};

// For each left vertex, its partner (or nullopt).
using Matching = std::vector<std::optional<size_t>>;

size_t MatchingSize(const Matching& matching);

// A maximum-cardinality matching found with augmenting paths.
Matching MaximumMatching(const BipartiteGraph& graph);

// The maximum matching that is lexicographically smallest when read as the
// sequence of partners of left vertices 0, 1, ...; a matched vertex precedes
// an unmatched one.
Matching LexicographicMaximumMatching(const BipartiteGraph& graph);

}  // namespace kanon

#endif  // KANON_MATCHING_H_
