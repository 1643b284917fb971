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

#include "mi/exchange_graph.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "mi/errors.hpp"

namespace mi {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

}  // namespace

ExchangeGraph build_exchange_graph(const Matroid& m1, const Matroid& m2,
                                   Mask current, bool pruned) {
  if (!m1.independent(current) || !m2.independent(current)) {
    throw ContractError("exchange graph needs a common independent set");
  }
  ExchangeGraph g;
  g.n = m1.size();
  g.current = current;
  g.pruned = pruned;
  g.first_arcs.assign(static_cast<std::size_t>(g.n), 0);
  g.second_arcs.assign(static_cast<std::size_t>(g.n), 0);

  Mask outside = m1.all() & ~current;
  for (Mask rest = outside; rest; rest &= rest - 1) {
    int x = std::countr_zero(rest);
    Mask grown = current | bit(x);
    if (m1.independent(grown)) g.sources |= bit(x);
    if (m2.independent(grown)) g.sinks |= bit(x);
  }
  for (Mask rest = outside; rest; rest &= rest - 1) {
    int x = std::countr_zero(rest);
    Mask grown = current | bit(x);
    bool is_source = contains(g.sources, x);
    bool is_sink = contains(g.sinks, x);
    for (Mask inner = current; inner; inner &= inner - 1) {
      int y = std::countr_zero(inner);
      Mask swapped = grown ^ bit(y);
      // Adding a source keeps the first matroid independent after any
      // removal, so those arcs exist without a query; same for sinks.
      if (!(pruned && is_source) && (is_source || m1.independent(swapped))) {
        g.first_arcs[static_cast<std::size_t>(y)] |= bit(x);
      }
      if (!(pruned && is_sink) && (is_sink || m2.independent(swapped))) {
        g.second_arcs[static_cast<std::size_t>(x)] |= bit(y);
      }
    }
  }
  return g;
}

std::vector<int> bfs_distances(const ExchangeGraph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
  std::array<int, kMaxGroundSize> queue{};
  int head = 0;
  int tail = 0;
  dist[static_cast<std::size_t>(source)] = 1;
  queue[tail++] = source;
  while (head < tail) {
    int v = queue[head++];
    Mask heads = g.out(v);
    for (Mask rest = heads; rest; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      if (dist[static_cast<std::size_t>(u)] >= 0) continue;
      dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
      queue[tail++] = u;
    }
  }
  return dist;
}

Mask reachable_to(const ExchangeGraph& g, Mask targets) {
  Mask reach = targets;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.n; ++v) {
      if (contains(reach, v)) continue;
      if (g.out(v) & reach) {
        reach |= bit(v);
        changed = true;
      }
    }
  }
  return reach;
}

bool has_negative_cycle(const ExchangeGraph& g, const WeightVec& w) {
  // Walk relaxation from a virtual zero everywhere; a cycle of negative
  // total vertex cost keeps improving past n rounds.
  std::vector<long long> dist(static_cast<std::size_t>(g.n), 0);
  for (int round = 0; round <= g.n; ++round) {
    bool changed = false;
    for (int v = 0; v < g.n; ++v) {
      Mask heads = g.out(v);
      for (Mask rest = heads; rest; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        long long cand = dist[static_cast<std::size_t>(v)] +
                         element_cost(w, g.current, u);
        if (cand < dist[static_cast<std::size_t>(u)]) {
          dist[static_cast<std::size_t>(u)] = cand;
          changed = true;
        }
      }
    }
    if (!changed) return false;
  }
  return true;
}

std::optional<CostedPath> shortest_cheapest_path(const ExchangeGraph& g,
                                                 const WeightVec& w, Mask from,
                                                 Mask to) {
  if (has_negative_cycle(g, w)) {
    throw ContractError("path search requires no negative-cost cycle");
  }
  std::vector<long long> cost(static_cast<std::size_t>(g.n), kInf);
  std::vector<int> len(static_cast<std::size_t>(g.n), 0);
  std::vector<int> parent(static_cast<std::size_t>(g.n), -1);
  for (Mask rest = from; rest; rest &= rest - 1) {
    int s = std::countr_zero(rest);
    cost[static_cast<std::size_t>(s)] = element_cost(w, g.current, s);
    len[static_cast<std::size_t>(s)] = 1;
  }
  // Label-correcting rounds; optimal simple paths have at most n vertices.
  for (int round = 0; round < g.n; ++round) {
    bool changed = false;
    for (int v = 0; v < g.n; ++v) {
      if (cost[static_cast<std::size_t>(v)] >= kInf) continue;
      Mask heads = g.out(v);
      for (Mask rest = heads; rest; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        long long cand_cost = cost[static_cast<std::size_t>(v)] +
                              element_cost(w, g.current, u);
        int cand_len = len[static_cast<std::size_t>(v)] + 1;
        if (cand_cost < cost[static_cast<std::size_t>(u)] ||
            (cand_cost == cost[static_cast<std::size_t>(u)] &&
             cand_len < len[static_cast<std::size_t>(u)])) {
          cost[static_cast<std::size_t>(u)] = cand_cost;
          len[static_cast<std::size_t>(u)] = cand_len;
          parent[static_cast<std::size_t>(u)] = v;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  int best = -1;
  for (Mask rest = to; rest; rest &= rest - 1) {
    int t = std::countr_zero(rest);
    if (cost[static_cast<std::size_t>(t)] >= kInf) continue;
    if (best < 0 ||
        cost[static_cast<std::size_t>(t)] < cost[static_cast<std::size_t>(best)] ||
        (cost[static_cast<std::size_t>(t)] == cost[static_cast<std::size_t>(best)] &&
         len[static_cast<std::size_t>(t)] < len[static_cast<std::size_t>(best)])) {
      best = t;
    }
  }
  if (best < 0) return std::nullopt;
  CostedPath path;
  path.cost = cost[static_cast<std::size_t>(best)];
  path.length = len[static_cast<std::size_t>(best)];
  for (int v = best; v >= 0; v = parent[static_cast<std::size_t>(v)]) {
    path.vertices.push_back(v);
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

namespace {

Mask path_mask(const CostedPath& p) {
  Mask m = 0;
  for (int v : p.vertices) m |= bit(v);
  return m;
}

// Shortest source--sink path by plain BFS, with vertices scanned in
// ascending order so the result is deterministic.
std::optional<CostedPath> shortest_path(const ExchangeGraph& g) {
  std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
  std::vector<int> parent(static_cast<std::size_t>(g.n), -1);
  std::array<int, kMaxGroundSize> queue{};
  int head = 0;
  int tail = 0;
  for (Mask rest = g.sources; rest; rest &= rest - 1) {
    int s = std::countr_zero(rest);
    dist[static_cast<std::size_t>(s)] = 1;
    queue[tail++] = s;
  }
  int found = -1;
  while (head < tail) {
    int v = queue[head++];
    if (contains(g.sinks, v)) {
      found = v;
      break;
    }
    for (Mask rest = g.out(v); rest; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      if (dist[static_cast<std::size_t>(u)] >= 0) continue;
      dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
      parent[static_cast<std::size_t>(u)] = v;
      queue[tail++] = u;
    }
  }
  if (found < 0) return std::nullopt;
  CostedPath path;
  path.length = dist[static_cast<std::size_t>(found)];
  for (int v = found; v >= 0; v = parent[static_cast<std::size_t>(v)]) {
    path.vertices.push_back(v);
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

}  // namespace

AugmentStep augment_max_cardinality(const Matroid& m1, const Matroid& m2,
                                    Mask current) {
  ExchangeGraph full = build_exchange_graph(m1, m2, current, false);
  AugmentStep step;
  if (auto path = shortest_path(full)) {
    path->cost = 0;
    step.next = current ^ path_mask(*path);
    step.path = std::move(path);
  } else {
    step.certificate = reachable_to(full, full.sinks);
  }
  return step;
}

AugmentStep augment_max_weight(const Matroid& m1, const Matroid& m2,
                               const WeightVec& w, Mask current) {
  ExchangeGraph full = build_exchange_graph(m1, m2, current, false);
  if (has_negative_cycle(full, w)) {
    throw ContractError(
        "augmenting step requires a weight-maximal set of its size");
  }
  ExchangeGraph pruned = build_exchange_graph(m1, m2, current, true);
  AugmentStep step;
  if (auto path = shortest_cheapest_path(pruned, w, full.sources, full.sinks)) {
    step.next = current ^ path_mask(*path);
    step.path = std::move(path);
  } else {
    step.certificate = reachable_to(full, full.sinks);
  }
  return step;
}

}  // namespace mi
