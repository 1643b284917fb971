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

#include "mi/matroid.hpp"

#include <string>
#include <utility>

#include "mi/errors.hpp"

namespace mi {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw RepresentationError("ground set size must be in [1, 64], got " +
                              std::to_string(n));
  }
}

Matroid::Matroid(GroundSet ground, Predicate independent)
    : ground_(ground), independent_(std::move(independent)) {
  if (!independent_) {
    throw RepresentationError("independence predicate must be callable");
  }
  if (!independent_(0)) {
    throw RepresentationError("the empty set must be independent");
  }
  for (int e = 0; e < ground_.size(); ++e) {
    if (!independent_(bit(e))) {
      throw RepresentationError("element " + std::to_string(e) +
                                " is a loop; loopless matroids required");
    }
  }
}

int Matroid::rank(Mask x) const {
  Mask kept = 0;
  for (Mask rest = x; rest; rest &= rest - 1) {
    Mask e = rest & (~rest + 1);
    if (independent_(kept | e)) kept |= e;
  }
  return count(kept);
}

Mask Matroid::closure(Mask x) const {
  int base_rank = rank(x);
  Mask out = x;
  for (int e = 0; e < size(); ++e) {
    if (contains(x, e)) continue;
    if (rank(x | bit(e)) == base_rank) out |= bit(e);
  }
  return out;
}

Mask Matroid::fundamental_circuit(Mask base, int x) const {
  if (!independent_(base)) {
    throw ContractError("fundamental_circuit: base set is dependent");
  }
  if (contains(base, x)) {
    throw ContractError("fundamental_circuit: element " + std::to_string(x) +
                        " already in base");
  }
  if (!contains(closure(base), x)) {
    throw ContractError("fundamental_circuit: element " + std::to_string(x) +
                        " is not spanned by base");
  }
  Mask out = 0;
  for (Mask rest = base; rest; rest &= rest - 1) {
    Mask y = rest & (~rest + 1);
    if (independent_((base ^ y) | bit(x))) out |= y;
  }
  return out;
}

}  // namespace mi
