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

#include <vector>

#include "mi/mask.hpp"

namespace mi {

// Integer weights, one per ground-set element. Integers keep every cost
// comparison exact; callers scale rationals beforehand.
using WeightVec = std::vector<long long>;

inline long long weight_of(const WeightVec& w, Mask x) {
  long long total = 0;
  for (Mask rest = x; rest; rest &= rest - 1) {
    total += w[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return total;
}

// Vertex cost for augmenting-path search relative to the current set:
// w(e) inside the set, -w(e) outside, so that a cheapest path trades the
// least weight away.
inline long long element_cost(const WeightVec& w, Mask current, int e) {
  long long we = w[static_cast<std::size_t>(e)];
  return contains(current, e) ? we : -we;
}

inline long long sequence_cost(const WeightVec& w, Mask current,
                               const std::vector<int>& seq) {
  long long total = 0;
  for (int e : seq) total += element_cost(w, current, e);
  return total;
}

}  // namespace mi
