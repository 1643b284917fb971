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

#include "doctest.h"
#include "mi/errors.hpp"
#include "mi/oracle.hpp"
#include "mi/zoo.hpp"
#include "test_util.hpp"

using namespace mi;

TEST_CASE("rank-sum queries") {
  Matroid u = make_uniform(4, 2);
  RestrictedOracle oracle(OracleKind::kSum, u, u);
  CHECK(oracle.rank_sum(0) == 0);
  CHECK(oracle.rank_sum(full_mask(4)) == 4);
  // Common independent sets saturate the sum.
  CHECK(oracle.rank_sum(bit(0) | bit(1)) == 4);
  CHECK(oracle.counters().sum == 3);
}

TEST_CASE("ci, min, and max queries") {
  Matroid free_matroid = make_uniform(4, 4);
  Matroid narrow = make_uniform(4, 1);

  RestrictedOracle ci(OracleKind::kCi, free_matroid, narrow);
  CHECK(ci.common_independent(0));
  CHECK_FALSE(ci.common_independent(bit(0) | bit(1)));

  RestrictedOracle mx(OracleKind::kMax, free_matroid, narrow);
  CHECK(mx.rank_max(full_mask(4)) == 4);

  RestrictedOracle mn(OracleKind::kMin, free_matroid, narrow);
  CHECK(mn.rank_min(full_mask(4)) == 1);
}

TEST_CASE("capability enforcement fails before any query") {
  Matroid u = make_uniform(4, 2);
  RestrictedOracle sum(OracleKind::kSum, u, u);
  CHECK_THROWS_AS(sum.common_independent(0), CapabilityError);
  CHECK_THROWS_AS(sum.rank_min(0), CapabilityError);
  CHECK_THROWS_AS(sum.rank_max(0), CapabilityError);
  CHECK_THROWS_AS(sum.first(), CapabilityError);
  CHECK(sum.counters().ci == 0);
  CHECK(sum.counters().min == 0);
  CHECK(sum.counters().max == 0);

  RestrictedOracle ci(OracleKind::kCi, u, u);
  CHECK_THROWS_AS(ci.rank_sum(0), CapabilityError);
  CHECK_THROWS_AS(SumQueryCapability{ci}, CapabilityError);

  RestrictedOracle ci_max(OracleKind::kCiMax, u, u);
  CHECK(ci_max.common_independent(bit(0)));
  CHECK(ci_max.rank_max(bit(0)) == 1);
  CHECK_THROWS_AS(ci_max.rank_sum(0), CapabilityError);
  CHECK_THROWS_AS(ci_max.rank_min(0), CapabilityError);
}

TEST_CASE("min plus max equals sum on every subset") {
  for (int n = 4; n <= 6; ++n) {
    auto zoo = testing::small_zoo(n);
    for (const auto& [name1, m1] : zoo) {
      for (const auto& [name2, m2] : zoo) {
        RestrictedOracle oracle(OracleKind::kFullPair, m1, m2);
        const Mask full = full_mask(n);
        for (Mask x = 0;; ++x) {
          REQUIRE(oracle.rank_min(x) + oracle.rank_max(x) ==
                  oracle.rank_sum(x));
          if (x == full) break;
        }
      }
    }
  }
}

TEST_CASE("sum-comparison predicates: pinned examples") {
  // A single common element is common independent.
  Matroid u12 = make_uniform(2, 1);
  RestrictedOracle o1(OracleKind::kSum, u12, u12);
  SumQueryCapability cap1(o1);
  CHECK(cap1.add_raises_sum_by_two(0, 0));

  // Only the free side gains: the sum rises by exactly one.
  Matroid free2 = make_uniform(2, 2);
  RestrictedOracle o2(OracleKind::kSum, u12, free2);
  SumQueryCapability cap2(o2);
  CHECK(cap2.add_raises_sum_by_one(bit(0), 1));

  // Same class both sides: the addition is flat.
  PartitionRep rep;
  rep.classes = {bit(0) | bit(1)};
  rep.capacities = {1};
  Matroid block = make_partition(rep);
  RestrictedOracle o3(OracleKind::kSum, block, block);
  SumQueryCapability cap3(o3);
  CHECK(cap3.add_keeps_sum_flat(bit(0), 1));

  // Saturation is common independence.
  RestrictedOracle o4(OracleKind::kSum, u12, free2);
  SumQueryCapability cap4(o4);
  CHECK(cap4.sum_saturated(0));
  CHECK(cap4.sum_saturated(bit(1)));
  CHECK_FALSE(cap4.sum_saturated(full_mask(2)));
}

TEST_CASE("both backends answer the predicates identically") {
  for (int n = 4; n <= 6; ++n) {
    auto zoo = testing::small_zoo(n);
    const Mask full = full_mask(n);
    for (const auto& [name1, m1] : zoo) {
      for (const auto& [name2, m2] : zoo) {
        CAPTURE(name1);
        CAPTURE(name2);
        RestrictedOracle sum_oracle(OracleKind::kSum, m1, m2);
        RestrictedOracle cim_oracle(OracleKind::kCiMax, m1, m2);
        SumQueryCapability sum_cap(sum_oracle);
        SumQueryCapability cim_cap(cim_oracle);
        sum_cap.enable_audit(m1, m2);
        cim_cap.enable_audit(m1, m2);
        for (Mask base = 0;; ++base) {
          bool common = m1.independent(base) && m2.independent(base);
          if (common) {
            for (int x = 0; x < n; ++x) {
              if (contains(base, x)) continue;
              REQUIRE(sum_cap.add_keeps_sum_flat(base, x) ==
                      cim_cap.add_keeps_sum_flat(base, x));
              REQUIRE(sum_cap.add_raises_sum_by_one(base, x) ==
                      cim_cap.add_raises_sum_by_one(base, x));
              REQUIRE(sum_cap.add_raises_sum_by_two(base, x) ==
                      cim_cap.add_raises_sum_by_two(base, x));
              REQUIRE(sum_cap.source_or_sink(base, x) ==
                      cim_cap.source_or_sink(base, x));
            }
          }
          REQUIRE(sum_cap.sum_saturated(base) == cim_cap.sum_saturated(base));
          if (base == full) break;
        }
      }
    }
  }
}

TEST_CASE("audit mode rejects precondition breaches") {
  Matroid u = make_uniform(4, 2);
  RestrictedOracle oracle(OracleKind::kSum, u, u);
  SumQueryCapability cap(oracle);
  cap.enable_audit(u, u);
  CHECK_THROWS_AS(cap.add_keeps_sum_flat(bit(0), 0), ContractError);
  CHECK_THROWS_AS(cap.add_raises_sum_by_one(full_mask(3), 3), ContractError);
}

TEST_CASE("counters track only the queries issued") {
  Matroid u = make_uniform(4, 2);
  RestrictedOracle oracle(OracleKind::kCiMax, u, u);
  SumQueryCapability cap(oracle);
  CHECK(cap.add_raises_sum_by_two(0, 0));  // one ci query
  CHECK(oracle.counters().ci == 1);
  CHECK(oracle.counters().max == 0);
  CHECK(oracle.counters().sum == 0);
  CHECK(oracle.counters().adapter == 1);

  // A flat addition needs the follow-up maximum-rank query.
  cap.add_keeps_sum_flat(bit(0) | bit(2), 1);
  CHECK(oracle.counters().ci == 2);
  CHECK(oracle.counters().max == 1);
  CHECK(oracle.counters().adapter == 2);

  oracle.reset_counters();
  CHECK(oracle.counters().ci == 0);
  CHECK(oracle.counters().adapter == 0);
}
