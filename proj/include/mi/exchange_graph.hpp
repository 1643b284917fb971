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

#include <optional>
#include <vector>

#include "mi/matroid.hpp"
#include "mi/weights.hpp"

namespace mi {

// Bipartite exchange digraph for a common independent set. Arcs of the
// first family run from inside the set to outside (the single swap keeps
// the first matroid independent), arcs of the second family run outside to
// inside. Sources are elements addable under the first matroid, sinks
// addable under the second. The pruned variant drops arcs entering sources
// and leaving sinks; it preserves shortest and cheapest augmenting paths
// and is the default for path search, while the full variant serves
// certificates and cycle checks.
struct ExchangeGraph {
  int n = 0;
  Mask current = 0;  // the common independent set
  Mask sources = 0;
  Mask sinks = 0;
  bool pruned = false;
  std::vector<Mask> first_arcs;   // index y in current: arc heads outside
  std::vector<Mask> second_arcs;  // index x outside: arc heads in current

  Mask out(int v) const {
    return contains(current, v) ? first_arcs[static_cast<std::size_t>(v)]
                                : second_arcs[static_cast<std::size_t>(v)];
  }
};

// Requires `current` common independent; throws ContractError otherwise.
ExchangeGraph build_exchange_graph(const Matroid& m1, const Matroid& m2,
                                   Mask current, bool pruned);

struct CostedPath {
  std::vector<int> vertices;
  long long cost = 0;
  int length = 0;  // number of vertices
};

// Vertex-count distances from `source` (the source itself has distance 1);
// -1 where unreachable.
std::vector<int> bfs_distances(const ExchangeGraph& g, int source);

// Vertices from which some target vertex is reachable (targets included).
Mask reachable_to(const ExchangeGraph& g, Mask targets);

// Whether some directed cycle has negative total vertex cost, with costs
// taken relative to g.current.
bool has_negative_cycle(const ExchangeGraph& g, const WeightVec& w);

// Minimum-cost `from`--`to` path, ties broken toward fewer vertices, then
// deterministically by scan order. Throws ContractError when the graph has
// a negative-cost cycle; returns nullopt when no path exists.
std::optional<CostedPath> shortest_cheapest_path(const ExchangeGraph& g,
                                                 const WeightVec& w, Mask from,
                                                 Mask to);

struct AugmentStep {
  std::optional<Mask> next;           // grown common independent set
  std::optional<CostedPath> path;     // the augmenting path used
  std::optional<Mask> certificate;    // set when no augmentation exists
};

// One augmenting step toward maximum cardinality: a shortest source--sink
// path when one exists, otherwise the certificate set Z with
// r_1(Z) + r_2(E \ Z) = |current|.
AugmentStep augment_max_cardinality(const Matroid& m1, const Matroid& m2,
                                    Mask current);

// One augmenting step along a shortest cheapest path; requires `current`
// of maximum weight among common independent sets of its size (detected
// via the negative-cycle check).
AugmentStep augment_max_weight(const Matroid& m1, const Matroid& m2,
                               const WeightVec& w, Mask current);

}  // namespace mi
