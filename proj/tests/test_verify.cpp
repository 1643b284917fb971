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

#include <cstdlib>

#include "doctest.h"
#include "mi/errors.hpp"
#include "mi/verify.hpp"
#include "mi/zoo.hpp"
#include "test_util.hpp"

using namespace mi;

TEST_CASE("brute force basics") {
  Matroid u13 = make_uniform(3, 1);
  BruteForceResult twin = brute_force(u13, u13, WeightVec{1, 1, 1});
  CHECK(twin.max_cardinality == 1);
  CHECK(twin.best_weight == 1);

  PartitionRep left;
  left.classes = {bit(0) | bit(1), bit(2) | bit(3)};
  left.capacities = {1, 1};
  PartitionRep right;
  right.classes = {bit(0) | bit(2), bit(1) | bit(3)};
  right.capacities = {1, 1};
  BruteForceResult k22 = brute_force(make_partition(left),
                                     make_partition(right),
                                     WeightVec{5, 1, 1, 4});
  CHECK(k22.max_cardinality == 2);
  CHECK(k22.best_weight_by_size[2] == 9);
  CHECK(k22.best_set_by_size[2] == (bit(0) | bit(3)));
  CHECK(k22.best_weight == 9);
  CHECK(k22.duality_value == 2);
}

TEST_CASE("duality minimum always equals the maximum cardinality") {
  for (int n = 4; n <= 5; ++n) {
    auto zoo = testing::small_zoo(n);
    WeightVec w;
    for (int e = 0; e < n; ++e) w.push_back(e - 1);
    for (const auto& [name1, m1] : zoo) {
      for (const auto& [name2, m2] : zoo) {
        CAPTURE(name1);
        CAPTURE(name2);
        BruteForceResult truth = brute_force(m1, m2, w);
        REQUIRE(truth.duality_value == truth.max_cardinality);
        // The recorded argmin set attains the bound.
        Mask z = truth.duality_set;
        REQUIRE(m1.rank(z) + m2.rank(full_mask(n) & ~z) ==
                truth.max_cardinality);
      }
    }
  }
}

TEST_CASE("brute force enforces its budget") {
  Matroid wide = make_uniform(30, 3);
  CHECK_THROWS_AS(brute_force(wide, wide, WeightVec(30, 0)), BudgetError);

  // The environment variable overrides the limit in both directions.
  setenv("MI_BRUTE_FORCE_MAX_N", "4", 1);
  Matroid inner = make_uniform(5, 2);
  CHECK_THROWS_AS(brute_force(inner, inner, WeightVec(5, 0)), BudgetError);
  unsetenv("MI_BRUTE_FORCE_MAX_N");
  CHECK(brute_force(inner, inner, WeightVec(5, 0)).max_cardinality == 2);
}

TEST_CASE("minimum rank stays hidden from sum and common independence") {
  auto witness = find_separation_witness(
      OracleKind::kMin, {OracleKind::kSum, OracleKind::kCi}, false);
  REQUIRE(witness.has_value());
  CHECK(witness->differing_subset == full_mask(4));
  CHECK(witness->value_a == 2);
  CHECK(witness->value_b == 3);
  CHECK(reverify_witness(*witness));

  // The instances really do differ in their minimum rank over E.
  Matroid a1 = witness_matroid(witness->first_a, false);
  Matroid a2 = witness_matroid(witness->second_a, false);
  Matroid b1 = witness_matroid(witness->first_b, false);
  Matroid b2 = witness_matroid(witness->second_b, false);
  Mask e = full_mask(4);
  CHECK(std::min(a1.rank(e), a2.rank(e)) == 2);
  CHECK(std::min(b1.rank(e), b2.rank(e)) == 3);
  CHECK(a1.rank(e) + a2.rank(e) == b1.rank(e) + b2.rank(e));
}

TEST_CASE("rank sum stays hidden from truncated ci plus max") {
  auto witness = find_separation_witness(
      OracleKind::kSum, {OracleKind::kCi, OracleKind::kMax}, true);
  REQUIRE(witness.has_value());
  CHECK(witness->truncated);
  CHECK(witness->differing_subset == full_mask(4));
  CHECK(((witness->value_a == 5 && witness->value_b == 6) ||
         (witness->value_a == 6 && witness->value_b == 5)));
  CHECK(reverify_witness(*witness));
}

TEST_CASE("maximum rank stays hidden from the rank sum") {
  auto witness =
      find_separation_witness(OracleKind::kMax, {OracleKind::kSum}, false);
  REQUIRE(witness.has_value());
  CHECK(witness->differing_subset == full_mask(4));
  CHECK(((witness->value_a == 4 && witness->value_b == 3) ||
         (witness->value_a == 3 && witness->value_b == 4)));
  CHECK(reverify_witness(*witness));
}

TEST_CASE("witness search is deterministic") {
  auto first = find_separation_witness(
      OracleKind::kMin, {OracleKind::kSum, OracleKind::kCi}, false);
  auto second = find_separation_witness(
      OracleKind::kMin, {OracleKind::kSum, OracleKind::kCi}, false);
  REQUIRE(first.has_value());
  REQUIRE(second.has_value());
  CHECK(first->first_a.edges == second->first_a.edges);
  CHECK(first->second_a.edges == second->second_a.edges);
  CHECK(first->first_b.edges == second->first_b.edges);
  CHECK(first->second_b.edges == second->second_b.edges);
}

TEST_CASE("a corrupted witness fails re-verification") {
  auto witness =
      find_separation_witness(OracleKind::kMax, {OracleKind::kSum}, false);
  REQUIRE(witness.has_value());
  SeparationWitness broken = *witness;
  broken.value_a = broken.value_b;
  CHECK_FALSE(reverify_witness(broken));
  SeparationWitness swapped = *witness;
  swapped.second_b = swapped.second_a;
  swapped.first_b = swapped.first_a;
  CHECK_FALSE(reverify_witness(swapped));
}

TEST_CASE("a free matroid makes the maximum rank oracle blind") {
  CHECK(check_free_matroid_blindness());
}
