// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <utility>
#include <vector>

#include "mi/matroid.hpp"

namespace mi {

// Partition of the ground set with one capacity per class. The "unit"
// flavor has every capacity equal to one.
struct PartitionRep {
  std::vector<Mask> classes;
  std::vector<int> capacities;
};

// Multigraph whose edges are the ground-set elements (element i <-> edge i).
// Parallel edges are allowed, self-loops are not.
struct GraphRep {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// Hypergraph representation of an elementary split matroid: a global rank
// bound `rank` plus one capacity per hyperedge, subject to
//   (H1)  |H_i ∩ H_j| <= r_i + r_j - r   for all i < j,
//   (H2)  |E \ H_i| + r_i >= r           for all i.
// A set is independent when its size is at most r and it meets every
// hyperedge H_i in at most r_i elements.
struct SplitRep {
  int n = 0;
  int rank = 0;
  std::vector<Mask> hyperedges;
  std::vector<int> bounds;
};

// X independent iff |X| <= rank. rank = n yields the free matroid;
// rank = 0 is rejected because it would make every element a loop.
Matroid make_uniform(int n, int rank);

// X independent iff X meets every class within its capacity. Classes must
// be disjoint and cover the ground set; a zero capacity is rejected as it
// would turn the class into loops.
Matroid make_partition(const PartitionRep& rep);

// X independent iff the edge set X is a forest.
Matroid make_graphic(const GraphRep& rep);

// Validates (H1)/(H2) and builds the elementary split matroid.
Matroid make_split(const SplitRep& rep);

// Throws RepresentationError naming the violated condition and the
// offending hyperedge indices.
void validate_split_rep(const SplitRep& rep);

// Closed-form rank of a valid split representation:
// min{ r, |Z|, min_i(|Z \ H_i| + r_i) }.
int split_rank(const SplitRep& rep, Mask z);

// X independent iff X is independent in m and |X| <= k.
Matroid truncate(const Matroid& m, int k);

// Direct sum on the disjoint union; the second ground set is relabeled by
// an offset of first.size().
Matroid direct_sum(const Matroid& first, const Matroid& second);

}  // namespace mi
