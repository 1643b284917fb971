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

#include <functional>
#include <optional>
#include <vector>

#include "mi/oracle.hpp"
#include "mi/weights.hpp"

namespace mi {

// Candidate augmenting sequence of distinct elements, alternating between
// the outside and the inside of the current set. The empty sequence is the
// null state; its cost compares above every real cost.
struct PathSeq {
  std::vector<int> elems;
  long long cost = 0;

  bool null() const { return elems.empty(); }
  int length() const { return static_cast<int>(elems.size()); }
  int last() const { return elems.back(); }
  bool has(int e) const;
  Mask mask() const;
};

// Deterministic total order: cost first, then length, then the element
// sequence itself. Null sorts last.
bool path_better(const PathSeq& a, const PathSeq& b);

// Test instrumentation; production solves pass nullptr.
struct SolverHooks {
  // Fired whenever a label P_e is (re)assigned during the rank-sum search.
  std::function<void(Mask current, int source, const PathSeq&)>
      on_label_update;
  // Fired whenever a level path is recorded during the common-independence
  // breadth-first search.
  std::function<void(Mask current, int source, const std::vector<int>&)>
      on_bfs_label;
};

struct SizeEntry {
  int size = 0;
  Mask set = 0;
  long long weight = 0;
};

struct SolveReport {
  int n = 0;
  OracleKind oracle = OracleKind::kFullPair;
  bool weighted = false;
  std::vector<SizeEntry> per_size;  // one entry per size 0..max_cardinality
  int max_cardinality = 0;
  Mask max_cardinality_set = 0;
  int best_size = 0;
  Mask best_set = 0;
  long long best_weight = 0;
  std::optional<Mask> certificate;  // reference solver only
  long long augmentations = 0;
  QueryCounters queries;
};

// Same solution content (per-size table, optimum, cardinality); counters
// and oracle kind are ignored.
bool same_solution(const SolveReport& a, const SolveReport& b);

// Bellman-Ford over the implicit exchange graph, driven purely by
// sum-comparison predicates. For a source, returns a cheapest augmenting
// sequence through it (ties toward fewer vertices), or nullopt when no
// augmentation passes through `source`. Requires `current` weight-maximal
// at its size and `source` a source or sink outside it.
std::optional<PathSeq> rank_sum_path_search(SumQueryCapability& cap,
                                            const WeightVec& w, Mask current,
                                            int source,
                                            const SolverHooks* hooks = nullptr);

// One weighted augmenting step: scans every source/sink candidate and picks
// the best returned sequence. nullopt means no larger common independent
// set exists.
std::optional<Mask> augment_rank_sum(SumQueryCapability& cap,
                                     const WeightVec& w, Mask current,
                                     const SolverHooks* hooks = nullptr);

// Weighted matroid intersection with a rank-sum oracle.
SolveReport solve_rank_sum(RestrictedOracle& oracle, const WeightVec& w,
                           const SolverHooks* hooks = nullptr);

// The identical driver over the common-independence + maximum-rank backend.
SolveReport solve_ci_max(RestrictedOracle& oracle, const WeightVec& w,
                         const SolverHooks* hooks = nullptr);

// Breadth-first search over the implicit exchange graph using only
// common-independence queries; sound when the first hidden matroid is a
// partition matroid with unit capacities. Returns a sequence whose
// symmetric difference with `current` is common independent and one larger,
// or nullopt.
std::optional<std::vector<int>> ci_bfs_path(RestrictedOracle& oracle,
                                            Mask current, int source,
                                            const SolverHooks* hooks = nullptr);

// One cardinality augmenting step under the same structural assumption.
std::optional<Mask> augment_ci_partition(RestrictedOracle& oracle,
                                         Mask current,
                                         const SolverHooks* hooks = nullptr);

// Maximum-cardinality driver; weights are used for reporting only.
SolveReport solve_ci_partition(RestrictedOracle& oracle,
                               const WeightVec& w_for_report,
                               const SolverHooks* hooks = nullptr);

// One weighted augmenting step when the first hidden matroid is an
// elementary split matroid: every candidate one or three elements away is
// tested directly, which covers all augmenting paths that can matter.
std::optional<Mask> augment_ci_split(RestrictedOracle& oracle,
                                     const WeightVec& w, Mask current);

// Weighted driver for the elementary split case.
SolveReport solve_ci_split(RestrictedOracle& oracle, const WeightVec& w);

// Reference solver with direct access to both matroids; augments along
// shortest (cheapest) paths in the explicit exchange graph and reports the
// terminating certificate.
SolveReport solve_reference(const Matroid& m1, const Matroid& m2,
                            const WeightVec& w, bool weighted);

}  // namespace mi
