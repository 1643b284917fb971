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
#include "mi/zoo.hpp"
#include "test_util.hpp"

using namespace mi;

TEST_CASE("uniform matroids") {
  Matroid u = make_uniform(4, 2);
  CHECK(u.independent(bit(0) | bit(1)));
  CHECK_FALSE(u.independent(bit(0) | bit(1) | bit(3)));

  Matroid free_matroid = make_uniform(4, 4);
  CHECK(free_matroid.independent(full_mask(4)));

  CHECK_THROWS_AS(make_uniform(3, 0), RepresentationError);
  CHECK_THROWS_AS(make_uniform(3, 4), RepresentationError);
}

TEST_CASE("partition matroids") {
  PartitionRep rep;
  rep.classes = {bit(0) | bit(1), bit(2) | bit(3)};
  rep.capacities = {1, 1};
  Matroid m = make_partition(rep);
  CHECK(m.independent(bit(1) | bit(3)));
  CHECK_FALSE(m.independent(bit(0) | bit(1)));

  rep.capacities = {0, 1};
  CHECK_THROWS_AS(make_partition(rep), RepresentationError);

  PartitionRep overlapping;
  overlapping.classes = {bit(0) | bit(1), bit(1) | bit(2)};
  overlapping.capacities = {1, 1};
  CHECK_THROWS_AS(make_partition(overlapping), RepresentationError);

  PartitionRep gap;
  gap.classes = {bit(0), bit(2)};  // skips element 1
  gap.capacities = {1, 1};
  CHECK_THROWS_AS(make_partition(gap), RepresentationError);
}

TEST_CASE("graphic matroids") {
  GraphRep triangle;
  triangle.vertices = 3;
  triangle.edges = {{0, 1}, {1, 2}, {0, 2}};
  Matroid m = make_graphic(triangle);
  CHECK(m.independent(bit(0) | bit(1)));
  CHECK(m.independent(bit(1) | bit(2)));
  CHECK_FALSE(m.independent(full_mask(3)));

  GraphRep parallel;
  parallel.vertices = 2;
  parallel.edges = {{0, 1}, {0, 1}};
  Matroid p = make_graphic(parallel);
  CHECK_FALSE(p.independent(full_mask(2)));

  GraphRep loop;
  loop.vertices = 2;
  loop.edges = {{0, 0}, {0, 1}};
  CHECK_THROWS_AS(make_graphic(loop), RepresentationError);
}

TEST_CASE("split matroids validate the hypergraph conditions") {
  SplitRep rep;
  rep.n = 4;
  rep.rank = 2;
  rep.hyperedges = {bit(0) | bit(1)};
  rep.bounds = {1};
  Matroid m = make_split(rep);
  CHECK(m.rank(bit(0) | bit(1)) == 1);
  CHECK(m.rank(full_mask(4)) == 2);

  SplitRep bad;
  bad.n = 4;
  bad.rank = 3;
  bad.hyperedges = {bit(0) | bit(1) | bit(2)};
  bad.bounds = {1};
  // |E \ H| + bound = 1 + 1 = 2 < 3.
  CHECK_THROWS_WITH_AS(make_split(bad),
                       doctest::Contains("(H2) violated for hyperedge 0"),
                       RepresentationError);

  SplitRep crossing;
  crossing.n = 6;
  crossing.rank = 4;
  crossing.hyperedges = {full_mask(4), full_mask(4) << 2};
  crossing.bounds = {2, 2};
  // Overlap {2,3} has size 2 > 2 + 2 - 4.
  CHECK_THROWS_WITH_AS(make_split(crossing),
                       doctest::Contains("(H1) violated for hyperedges 0 and 1"),
                       RepresentationError);
}

TEST_CASE("split rank formula matches the greedy rank everywhere") {
  std::vector<SplitRep> reps;
  for (int n = 4; n <= 6; ++n) {
    SplitRep plain;
    plain.n = n;
    plain.rank = n / 2;
    reps.push_back(plain);

    SplitRep one;
    one.n = n;
    one.rank = n / 2;
    one.hyperedges = {full_mask(n - 1)};
    one.bounds = {n / 2 - 1 > 0 ? n / 2 - 1 : 1};
    reps.push_back(one);

    SplitRep two;
    two.n = n;
    two.rank = 2;
    two.hyperedges = {bit(0) | bit(1), bit(n - 2) | bit(n - 1)};
    two.bounds = {1, 1};
    reps.push_back(two);
  }
  for (const SplitRep& rep : reps) {
    CAPTURE(rep.n);
    Matroid m = make_split(rep);
    const Mask full = m.all();
    for (Mask z = 0;; ++z) {
      REQUIRE(split_rank(rep, z) == m.rank(z));
      if (z == full) break;
    }
  }
}

TEST_CASE("small independent sets are tight for at most one hyperedge") {
  // Exhaustive over valid split representations with up to two hyperedges.
  for (int n = 4; n <= 6; ++n) {
    const Mask full = full_mask(n);
    for (int rank = 1; rank <= n; ++rank) {
      for (Mask h1 = 1; h1 <= full; h1 += 7) {  // stride keeps the sweep fast
        for (int b1 = 1; b1 <= rank; ++b1) {
          SplitRep rep;
          rep.n = n;
          rep.rank = rank;
          rep.hyperedges = {h1, full & ~h1};
          rep.bounds = {b1, rank - 1 > 0 ? rank - 1 : 1};
          if ((full & ~h1) == 0) rep.hyperedges.pop_back(), rep.bounds.pop_back();
          try {
            validate_split_rep(rep);
          } catch (const RepresentationError&) {
            continue;
          }
          Matroid m = make_split(rep);
          for (Mask f = 0;; ++f) {
            if (m.independent(f) && count(f) < rank) {
              int tight = 0;
              for (std::size_t i = 0; i < rep.hyperedges.size(); ++i) {
                if (count(f & rep.hyperedges[i]) == rep.bounds[i]) ++tight;
              }
              REQUIRE(tight <= 1);
            }
            if (f == full) break;
          }
        }
      }
    }
  }
}

TEST_CASE("truncation") {
  Matroid truncated = truncate(make_uniform(4, 4), 3);
  CHECK_FALSE(truncated.independent(full_mask(4)));
  CHECK(truncated.independent(full_mask(3)));

  // Truncating at the ground size changes nothing.
  GraphRep cycle;
  cycle.vertices = 4;
  cycle.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  Matroid g = make_graphic(cycle);
  Matroid same = truncate(g, 4);
  for (Mask x = 0; x <= full_mask(4); ++x) {
    CHECK(same.independent(x) == g.independent(x));
  }

  // A forest on five vertices has rank 4; its 3-truncation has rank 3.
  GraphRep forest;
  forest.vertices = 5;
  forest.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  CHECK(truncate(make_graphic(forest), 3).rank(full_mask(4)) == 3);

  // Truncating to zero creates loops.
  CHECK_THROWS_AS(truncate(make_uniform(3, 2), 0), RepresentationError);
}

TEST_CASE("direct sum") {
  Matroid sum = direct_sum(make_uniform(2, 1), make_uniform(2, 1));
  CHECK(sum.independent(bit(0) | bit(2)));
  CHECK_FALSE(sum.independent(bit(0) | bit(1)));
  CHECK(sum.rank(full_mask(4)) == 2);
}

TEST_CASE("every zoo matroid passes the axiom suite") {
  for (int n = 4; n <= 6; ++n) {
    for (const auto& [name, m] : testing::small_zoo(n)) {
      CAPTURE(name);
      CAPTURE(n);
      REQUIRE(testing::passes_axioms(m));
    }
  }
}
