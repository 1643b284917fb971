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

#include "mi/oracle.hpp"
#include "mi/weights.hpp"
#include "mi/zoo.hpp"

namespace mi {

// Ground truth by subset enumeration. Guarded by an element budget
// (default 24, overridable through the MI_BRUTE_FORCE_MAX_N environment
// variable) since the scan is exponential.
struct BruteForceResult {
  int max_cardinality = 0;
  std::vector<long long> best_weight_by_size;  // index = size, 0..max
  std::vector<Mask> best_set_by_size;
  int best_size = 0;
  Mask best_set = 0;
  long long best_weight = 0;
  // min over Z of r_1(Z) + r_2(E \ Z); always equals max_cardinality.
  long long duality_value = 0;
  Mask duality_set = 0;
};

BruteForceResult brute_force(const Matroid& m1, const Matroid& m2,
                             const WeightVec& w);

// Two instances over one 4-element ground set that every oracle in
// `agreeing` cannot tell apart on any subset, while `target` answers
// differently somewhere. Matroids are graphic (up to 5 vertices, parallel
// edges allowed), optionally 3-truncated.
struct SeparationWitness {
  GraphRep first_a, second_a;   // instance A
  GraphRep first_b, second_b;   // instance B
  bool truncated = false;       // 3-truncation applied to all four
  OracleKind target = OracleKind::kMin;
  std::vector<OracleKind> agreeing;
  Mask differing_subset = 0;
  int value_a = 0;
  int value_b = 0;
};

// Builds the matroid a witness graph stands for.
Matroid witness_matroid(const GraphRep& g, bool truncated);

// Deterministic exhaustive search over canonical candidate graphs; prefers
// a witness that differs on the full ground set. Returns nullopt when the
// space holds none.
std::optional<SeparationWitness> find_separation_witness(
    OracleKind target, std::vector<OracleKind> agreeing, bool truncated);

// Re-checks a stored witness over all subsets: full agreement for the
// agreeing oracles, disagreement of `target` at the recorded subset.
bool reverify_witness(const SeparationWitness& witness);

// With a free first matroid the maximum-rank answer is |X| for every X no
// matter the second matroid, while common independence still depends on
// it. Returns true when both facts check out on contrasting pairs.
bool check_free_matroid_blindness();

}  // namespace mi
