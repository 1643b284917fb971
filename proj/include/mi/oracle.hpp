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

#include <string>

#include "mi/matroid.hpp"

namespace mi {

// Access level to a hidden matroid pair. FullPair exposes both independence
// predicates and exists for reference algorithms and tests only.
enum class OracleKind { kSum, kMin, kMax, kCi, kCiMax, kFullPair };

const char* to_string(OracleKind kind);

struct QueryCounters {
  long long sum = 0;
  long long min = 0;
  long long max = 0;
  long long ci = 0;
  // Simulated sum-comparison predicates answered by the adapter below.
  long long adapter = 0;
};

// Hides a matroid pair behind exactly one query interface and counts every
// call. No code outside this class may evaluate the hidden matroids unless
// the kind is FullPair. Counters mutate, so one oracle serves one solve at
// a time; distinct oracles over the same matroids may run in parallel.
class RestrictedOracle {
 public:
  RestrictedOracle(OracleKind kind, Matroid m1, Matroid m2);

  OracleKind kind() const { return kind_; }
  int size() const { return m1_.size(); }
  Mask all() const { return m1_.all(); }

  // r_1(x) + r_2(x). Requires kind Sum or FullPair.
  int rank_sum(Mask x);
  // min(r_1(x), r_2(x)). Requires kind Min or FullPair.
  int rank_min(Mask x);
  // max(r_1(x), r_2(x)). Requires kind Max, CiMax, or FullPair.
  int rank_max(Mask x);
  // Whether x is independent in both matroids. Requires Ci, CiMax, or
  // FullPair.
  bool common_independent(Mask x);

  const QueryCounters& counters() const { return counters_; }
  void reset_counters() { counters_ = QueryCounters{}; }
  void note_adapter_call() { ++counters_.adapter; }

  // FullPair only; CapabilityError otherwise.
  const Matroid& first() const;
  const Matroid& second() const;

 private:
  void require(bool ok, const char* what) const;

  OracleKind kind_;
  Matroid m1_;
  Matroid m2_;
  QueryCounters counters_;
};

// The four sum-comparison predicates every restricted path search is built
// from, answerable either by one rank-sum query each or by common
// independence plus maximum rank queries. Preconditions of the add_*
// predicates (`current` common independent, x outside it) are caller
// obligations; they are verified only when an audit pair is attached,
// since checking them through the restricted oracle is impossible.
class SumQueryCapability {
 public:
  enum class Backend { kRankSum, kCiMax };

  explicit SumQueryCapability(RestrictedOracle& oracle);

  Backend backend() const { return backend_; }
  RestrictedOracle& oracle() { return *oracle_; }
  int size() const { return oracle_->size(); }

  // r_sum(current + x) == 2|current|: x extends neither matroid's span.
  bool add_keeps_sum_flat(Mask current, int x);
  // r_sum(current + x) == 2|current| + 1.
  bool add_raises_sum_by_one(Mask current, int x);
  // r_sum(current + x) == 2|current| + 2: current + x is common independent.
  bool add_raises_sum_by_two(Mask current, int x);
  // r_sum(s) == 2|s|: s is common independent.
  bool sum_saturated(Mask s);
  // r_sum(current + s) >= 2|current| + 1: s is a source or a sink for the
  // common independent set `current`.
  bool source_or_sink(Mask current, int s);

  // Test builds attach the hidden pair so precondition breaches surface as
  // ContractError instead of silent wrong answers.
  void enable_audit(const Matroid& m1, const Matroid& m2);

 private:
  void audit_add(Mask current, int x, const char* what) const;

  RestrictedOracle* oracle_;
  Backend backend_;
  const Matroid* audit1_ = nullptr;
  const Matroid* audit2_ = nullptr;
};

}  // namespace mi
