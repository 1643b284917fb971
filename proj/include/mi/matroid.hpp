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

#include "mi/mask.hpp"

namespace mi {

// Ground set {0, ..., n-1}. Sizes outside [1, 64] are rejected so subsets
// always fit in a single-word mask and the empty ground set never reaches
// the path algorithms.
class GroundSet {
 public:
  explicit GroundSet(int n);

  int size() const { return n_; }
  Mask all() const { return full_mask(n_); }

 private:
  int n_;
};

// A matroid given by its ground set and independence predicate. Rank,
// closure, and fundamental circuits are derived from the predicate; the
// greedy scan is exact for matroids, so the rank is never stored.
// Construction rejects a dependent empty set and loops (dependent
// singletons). Instances are immutable and safe to share across threads.
class Matroid {
 public:
  using Predicate = std::function<bool(Mask)>;

  Matroid(GroundSet ground, Predicate independent);

  int size() const { return ground_.size(); }
  Mask all() const { return ground_.all(); }

  bool independent(Mask x) const { return independent_(x); }

  // Maximum cardinality of an independent subset of x.
  int rank(Mask x) const;

  // Elements whose addition does not raise the rank of x; a superset of x.
  Mask closure(Mask x) const;

  // Elements y of `base` with base + x - y independent again. Requires
  // `base` independent, x outside `base`, and x spanned by `base`;
  // violations raise ContractError. The result is never empty.
  Mask fundamental_circuit(Mask base, int x) const;

 private:
  GroundSet ground_;
  Predicate independent_;
};

}  // namespace mi
