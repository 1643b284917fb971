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

#include "mi/zoo.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "mi/errors.hpp"

namespace mi {

namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

Matroid make_uniform(int n, int rank) {
  GroundSet ground(n);
  if (rank < 0 || rank > n) {
    throw RepresentationError("uniform rank must be in [0, n], got " +
                              std::to_string(rank));
  }
  return Matroid(ground, [rank](Mask x) { return count(x) <= rank; });
}

Matroid make_partition(const PartitionRep& rep) {
  if (rep.classes.size() != rep.capacities.size()) {
    throw RepresentationError(
        "partition needs one capacity per class, got " +
        std::to_string(rep.classes.size()) + " classes and " +
        std::to_string(rep.capacities.size()) + " capacities");
  }
  if (rep.classes.empty()) {
    throw RepresentationError("partition needs at least one class");
  }
  Mask covered = 0;
  for (std::size_t j = 0; j < rep.classes.size(); ++j) {
    if (covered & rep.classes[j]) {
      throw RepresentationError("partition class " + std::to_string(j) +
                                " overlaps an earlier class");
    }
    covered |= rep.classes[j];
    if (rep.capacities[j] < 0) {
      throw RepresentationError("partition capacity " + std::to_string(j) +
                                " is negative");
    }
  }
  int n = count(covered);
  GroundSet ground(n);
  if (covered != ground.all()) {
    throw RepresentationError(
        "partition classes must cover a contiguous ground set 0..n-1");
  }
  PartitionRep local = rep;
  return Matroid(ground, [local](Mask x) {
    for (std::size_t j = 0; j < local.classes.size(); ++j) {
      if (count(x & local.classes[j]) > local.capacities[j]) return false;
    }
    return true;
  });
}

Matroid make_graphic(const GraphRep& rep) {
  if (rep.vertices < 1) {
    throw RepresentationError("graph needs at least one vertex");
  }
  int n = static_cast<int>(rep.edges.size());
  GroundSet ground(n);
  for (int i = 0; i < n; ++i) {
    auto [u, v] = rep.edges[i];
    if (u < 0 || u >= rep.vertices || v < 0 || v >= rep.vertices) {
      throw RepresentationError("edge " + std::to_string(i) +
                                " has an endpoint outside the vertex range");
    }
    if (u == v) {
      throw RepresentationError("edge " + std::to_string(i) +
                                " is a self-loop; self-loops are forbidden");
    }
  }
  GraphRep local = rep;
  return Matroid(ground, [local](Mask x) {
    std::vector<int> parent(static_cast<std::size_t>(local.vertices));
    std::iota(parent.begin(), parent.end(), 0);
    for (Mask rest = x; rest; rest &= rest - 1) {
      int e = std::countr_zero(rest);
      auto [u, v] = local.edges[static_cast<std::size_t>(e)];
      int ru = find_root(parent, u);
      int rv = find_root(parent, v);
      if (ru == rv) return false;
      parent[ru] = rv;
    }
    return true;
  });
}

void validate_split_rep(const SplitRep& rep) {
  GroundSet ground(rep.n);
  if (rep.rank < 1 || rep.rank > rep.n) {
    throw RepresentationError("split rank must be in [1, n], got " +
                              std::to_string(rep.rank));
  }
  if (rep.hyperedges.size() != rep.bounds.size()) {
    throw RepresentationError("split needs one bound per hyperedge, got " +
                              std::to_string(rep.hyperedges.size()) +
                              " hyperedges and " +
                              std::to_string(rep.bounds.size()) + " bounds");
  }
  std::size_t q = rep.hyperedges.size();
  for (std::size_t i = 0; i < q; ++i) {
    if (rep.hyperedges[i] & ~ground.all()) {
      throw RepresentationError("hyperedge " + std::to_string(i) +
                                " uses elements outside the ground set");
    }
    if (rep.bounds[i] < 0) {
      throw RepresentationError("hyperedge bound " + std::to_string(i) +
                                " is negative");
    }
    if (rep.bounds[i] == 0 && rep.hyperedges[i] != 0) {
      throw RepresentationError(
          "hyperedge " + std::to_string(i) +
          " has bound 0, which turns its elements into loops");
    }
  }
  for (std::size_t i = 0; i < q; ++i) {
    int slack = rep.n - count(rep.hyperedges[i]) + rep.bounds[i];
    if (slack < rep.rank) {
      throw RepresentationError(
          "(H2) violated for hyperedge " + std::to_string(i) +
          ": |E \\ H| + bound = " + std::to_string(slack) + " < rank " +
          std::to_string(rep.rank));
    }
    for (std::size_t j = i + 1; j < q; ++j) {
      int overlap = count(rep.hyperedges[i] & rep.hyperedges[j]);
      int limit = rep.bounds[i] + rep.bounds[j] - rep.rank;
      if (overlap > limit) {
        throw RepresentationError(
            "(H1) violated for hyperedges " + std::to_string(i) + " and " +
            std::to_string(j) + ": |H_i ∩ H_j| = " + std::to_string(overlap) +
            " > " + std::to_string(limit));
      }
    }
  }
}

int split_rank(const SplitRep& rep, Mask z) {
  int best = std::min(rep.rank, count(z));
  for (std::size_t i = 0; i < rep.hyperedges.size(); ++i) {
    best = std::min(best, count(z & ~rep.hyperedges[i]) + rep.bounds[i]);
  }
  return best;
}

Matroid make_split(const SplitRep& rep) {
  validate_split_rep(rep);
  SplitRep local = rep;
  return Matroid(GroundSet(rep.n), [local](Mask x) {
    if (count(x) > local.rank) return false;
    for (std::size_t i = 0; i < local.hyperedges.size(); ++i) {
      if (count(x & local.hyperedges[i]) > local.bounds[i]) return false;
    }
    return true;
  });
}

Matroid truncate(const Matroid& m, int k) {
  if (k < 0) {
    throw RepresentationError("truncation bound must be nonnegative, got " +
                              std::to_string(k));
  }
  Matroid inner = m;
  return Matroid(GroundSet(m.size()), [inner, k](Mask x) {
    return count(x) <= k && inner.independent(x);
  });
}

Matroid direct_sum(const Matroid& first, const Matroid& second) {
  int n1 = first.size();
  int n2 = second.size();
  if (n1 + n2 > kMaxGroundSize) {
    throw RepresentationError("direct sum exceeds the 64-element cap");
  }
  Matroid a = first;
  Matroid b = second;
  Mask low = full_mask(n1);
  return Matroid(GroundSet(n1 + n2), [a, b, low, n1](Mask x) {
    return a.independent(x & low) && b.independent(x >> n1);
  });
}

}  // namespace mi
