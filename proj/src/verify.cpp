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

#include "mi/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "mi/errors.hpp"

namespace mi {

namespace {

int brute_force_budget() {
  if (const char* env = std::getenv("MI_BRUTE_FORCE_MAX_N")) {
    int parsed = std::atoi(env);
    if (parsed > 0) return std::min(parsed, kMaxGroundSize);
  }
  return 24;
}

}  // namespace

BruteForceResult brute_force(const Matroid& m1, const Matroid& m2,
                             const WeightVec& w) {
  const int n = m1.size();
  if (n > brute_force_budget()) {
    throw BudgetError("brute force limited to " +
                      std::to_string(brute_force_budget()) + " elements, got " +
                      std::to_string(n));
  }
  constexpr long long kUnset = std::numeric_limits<long long>::min();
  std::vector<long long> best_by_size(static_cast<std::size_t>(n) + 1, kUnset);
  std::vector<Mask> set_by_size(static_cast<std::size_t>(n) + 1, 0);
  int max_cardinality = 0;
  const Mask full = m1.all();
  for (Mask x = 0;; ++x) {
    if (m1.independent(x) && m2.independent(x)) {
      int size = count(x);
      long long wx = weight_of(w, x);
      max_cardinality = std::max(max_cardinality, size);
      long long& best = best_by_size[static_cast<std::size_t>(size)];
      Mask& best_set = set_by_size[static_cast<std::size_t>(size)];
      if (best == kUnset || wx > best ||
          (wx == best && lex_less(x, best_set))) {
        best = wx;
        best_set = x;
      }
    }
    if (x == full) break;
  }

  BruteForceResult result;
  result.max_cardinality = max_cardinality;
  // Common independent sets exist at every size below the maximum, so the
  // table has no gaps.
  result.best_weight_by_size.assign(
      best_by_size.begin(),
      best_by_size.begin() + max_cardinality + 1);
  result.best_set_by_size.assign(set_by_size.begin(),
                                 set_by_size.begin() + max_cardinality + 1);
  for (int k = 0; k <= max_cardinality; ++k) {
    if (result.best_weight_by_size[static_cast<std::size_t>(k)] >
        result.best_weight) {
      result.best_weight = result.best_weight_by_size[static_cast<std::size_t>(k)];
      result.best_set = result.best_set_by_size[static_cast<std::size_t>(k)];
      result.best_size = k;
    }
  }
  result.duality_value = 2 * static_cast<long long>(n);
  for (Mask z = 0;; ++z) {
    long long value = m1.rank(z) + m2.rank(full & ~z);
    if (value < result.duality_value ||
        (value == result.duality_value && lex_less(z, result.duality_set))) {
      result.duality_value = value;
      result.duality_set = z;
    }
    if (z == full) break;
  }
  return result;
}

Matroid witness_matroid(const GraphRep& g, bool truncated) {
  Matroid m = make_graphic(g);
  return truncated ? truncate(m, 3) : m;
}

namespace {

constexpr int kWitnessElements = 4;
constexpr int kWitnessVertices = 5;

// Independence family over the 16 subsets, packed into one word.
std::uint32_t independence_signature(const Matroid& m) {
  std::uint32_t sig = 0;
  for (Mask x = 0; x < (Mask{1} << kWitnessElements); ++x) {
    if (m.independent(x)) sig |= std::uint32_t{1} << x;
  }
  return sig;
}

// All graphic matroids on four labeled edges over at most five vertices,
// one canonical representative graph per distinct independence family.
// Enumeration order is fixed, so representatives are reproducible.
std::vector<std::pair<std::uint32_t, GraphRep>> candidate_graphs() {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < kWitnessVertices; ++u) {
    for (int v = u + 1; v < kWitnessVertices; ++v) pairs.emplace_back(u, v);
  }
  std::map<std::uint32_t, GraphRep> seen;
  const int p = static_cast<int>(pairs.size());
  std::array<int, kWitnessElements> pick{};
  for (pick[0] = 0; pick[0] < p; ++pick[0]) {
    for (pick[1] = 0; pick[1] < p; ++pick[1]) {
      for (pick[2] = 0; pick[2] < p; ++pick[2]) {
        for (pick[3] = 0; pick[3] < p; ++pick[3]) {
          GraphRep g;
          g.vertices = kWitnessVertices;
          for (int e = 0; e < kWitnessElements; ++e) {
            g.edges.push_back(pairs[static_cast<std::size_t>(pick[e])]);
          }
          std::uint32_t sig = independence_signature(make_graphic(g));
          seen.emplace(sig, std::move(g));
        }
      }
    }
  }
  std::vector<std::pair<std::uint32_t, GraphRep>> out(seen.begin(), seen.end());
  return out;
}

int oracle_answer(OracleKind kind, const Matroid& m1, const Matroid& m2,
                  Mask x) {
  switch (kind) {
    case OracleKind::kSum:
      return m1.rank(x) + m2.rank(x);
    case OracleKind::kMin:
      return std::min(m1.rank(x), m2.rank(x));
    case OracleKind::kMax:
      return std::max(m1.rank(x), m2.rank(x));
    case OracleKind::kCi:
      return (m1.independent(x) && m2.independent(x)) ? 1 : 0;
    default:
      throw CapabilityError("witness search covers sum/min/max/ci only");
  }
}

std::vector<int> answer_vector(const std::vector<OracleKind>& kinds,
                               const Matroid& m1, const Matroid& m2) {
  std::vector<int> out;
  out.reserve(kinds.size() << kWitnessElements);
  for (Mask x = 0; x < (Mask{1} << kWitnessElements); ++x) {
    for (OracleKind kind : kinds) {
      out.push_back(oracle_answer(kind, m1, m2, x));
    }
  }
  return out;
}

}  // namespace

std::optional<SeparationWitness> find_separation_witness(
    OracleKind target, std::vector<OracleKind> agreeing, bool truncated) {
  const auto graphs = candidate_graphs();
  const int g = static_cast<int>(graphs.size());
  std::vector<Matroid> matroids;
  matroids.reserve(static_cast<std::size_t>(g));
  for (const auto& [sig, rep] : graphs) {
    matroids.push_back(witness_matroid(rep, truncated));
  }

  struct Entry {
    int i = 0;
    int j = 0;
    std::vector<int> target_vec;
  };
  std::map<std::vector<int>, std::vector<Entry>> buckets;
  std::vector<OracleKind> target_only{target};
  std::optional<SeparationWitness> fallback;
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      const Matroid& m1 = matroids[static_cast<std::size_t>(i)];
      const Matroid& m2 = matroids[static_cast<std::size_t>(j)];
      Entry entry{i, j, answer_vector(target_only, m1, m2)};
      auto key = answer_vector(agreeing, m1, m2);
      auto& bucket = buckets[key];
      for (const Entry& other : bucket) {
        if (other.target_vec == entry.target_vec) continue;
        SeparationWitness witness;
        witness.first_a = graphs[static_cast<std::size_t>(other.i)].second;
        witness.second_a = graphs[static_cast<std::size_t>(other.j)].second;
        witness.first_b = graphs[static_cast<std::size_t>(entry.i)].second;
        witness.second_b = graphs[static_cast<std::size_t>(entry.j)].second;
        witness.truncated = truncated;
        witness.target = target;
        witness.agreeing = agreeing;
        Mask everything = full_mask(kWitnessElements);
        if (other.target_vec[everything] != entry.target_vec[everything]) {
          witness.differing_subset = everything;
        } else {
          for (Mask x = 0; x < (Mask{1} << kWitnessElements); ++x) {
            if (other.target_vec[x] != entry.target_vec[x]) {
              witness.differing_subset = x;
              break;
            }
          }
        }
        witness.value_a = other.target_vec[witness.differing_subset];
        witness.value_b = entry.target_vec[witness.differing_subset];
        if (witness.differing_subset == everything) {
          if (reverify_witness(witness)) return witness;
        } else if (!fallback && reverify_witness(witness)) {
          fallback = witness;
        }
      }
      bucket.push_back(std::move(entry));
    }
  }
  return fallback;
}

bool reverify_witness(const SeparationWitness& witness) {
  Matroid a1 = witness_matroid(witness.first_a, witness.truncated);
  Matroid a2 = witness_matroid(witness.second_a, witness.truncated);
  Matroid b1 = witness_matroid(witness.first_b, witness.truncated);
  Matroid b2 = witness_matroid(witness.second_b, witness.truncated);
  if (a1.size() != b1.size()) return false;
  const Mask full = a1.all();
  for (Mask x = 0;; ++x) {
    for (OracleKind kind : witness.agreeing) {
      if (oracle_answer(kind, a1, a2, x) != oracle_answer(kind, b1, b2, x)) {
        return false;
      }
    }
    if (x == full) break;
  }
  int va = oracle_answer(witness.target, a1, a2, witness.differing_subset);
  int vb = oracle_answer(witness.target, b1, b2, witness.differing_subset);
  return va != vb && va == witness.value_a && vb == witness.value_b;
}

bool check_free_matroid_blindness() {
  const int n = 4;
  Matroid free_matroid = make_uniform(n, n);
  Matroid narrow = make_uniform(n, 1);
  RestrictedOracle with_narrow(OracleKind::kFullPair, free_matroid, narrow);
  RestrictedOracle with_free(OracleKind::kFullPair, free_matroid, free_matroid);
  bool ci_differs = false;
  for (Mask x = 0; x <= full_mask(n); ++x) {
    if (with_narrow.rank_max(x) != count(x)) return false;
    if (with_free.rank_max(x) != count(x)) return false;
    if (with_narrow.common_independent(x) != with_free.common_independent(x)) {
      ci_differs = true;
    }
  }
  return ci_differs;
}

}  // namespace mi
