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

#include "mi/oracle.hpp"

#include <algorithm>
#include <utility>

#include "mi/errors.hpp"

namespace mi {

const char* to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::kSum:
      return "sum";
    case OracleKind::kMin:
      return "min";
    case OracleKind::kMax:
      return "max";
    case OracleKind::kCi:
      return "ci";
    case OracleKind::kCiMax:
      return "ci-max";
    case OracleKind::kFullPair:
      return "full";
  }
  return "?";
}

RestrictedOracle::RestrictedOracle(OracleKind kind, Matroid m1, Matroid m2)
    : kind_(kind), m1_(std::move(m1)), m2_(std::move(m2)) {
  if (m1_.size() != m2_.size()) {
    throw RepresentationError("oracle needs both matroids on one ground set");
  }
}

void RestrictedOracle::require(bool ok, const char* what) const {
  if (!ok) {
    throw CapabilityError(std::string(what) + " not answerable by a " +
                          to_string(kind_) + " oracle");
  }
}

int RestrictedOracle::rank_sum(Mask x) {
  require(kind_ == OracleKind::kSum || kind_ == OracleKind::kFullPair,
          "rank-sum query");
  ++counters_.sum;
  return m1_.rank(x) + m2_.rank(x);
}

int RestrictedOracle::rank_min(Mask x) {
  require(kind_ == OracleKind::kMin || kind_ == OracleKind::kFullPair,
          "minimum-rank query");
  ++counters_.min;
  return std::min(m1_.rank(x), m2_.rank(x));
}

int RestrictedOracle::rank_max(Mask x) {
  require(kind_ == OracleKind::kMax || kind_ == OracleKind::kCiMax ||
              kind_ == OracleKind::kFullPair,
          "maximum-rank query");
  ++counters_.max;
  return std::max(m1_.rank(x), m2_.rank(x));
}

bool RestrictedOracle::common_independent(Mask x) {
  require(kind_ == OracleKind::kCi || kind_ == OracleKind::kCiMax ||
              kind_ == OracleKind::kFullPair,
          "common-independence query");
  ++counters_.ci;
  return m1_.independent(x) && m2_.independent(x);
}

const Matroid& RestrictedOracle::first() const {
  require(kind_ == OracleKind::kFullPair, "direct matroid access");
  return m1_;
}

const Matroid& RestrictedOracle::second() const {
  require(kind_ == OracleKind::kFullPair, "direct matroid access");
  return m2_;
}

SumQueryCapability::SumQueryCapability(RestrictedOracle& oracle)
    : oracle_(&oracle) {
  switch (oracle.kind()) {
    case OracleKind::kSum:
    case OracleKind::kFullPair:
      backend_ = Backend::kRankSum;
      break;
    case OracleKind::kCiMax:
      backend_ = Backend::kCiMax;
      break;
    default:
      throw CapabilityError(
          std::string("sum-comparison predicates need a sum or ci-max "
                      "oracle, got ") +
          to_string(oracle.kind()));
  }
}

void SumQueryCapability::enable_audit(const Matroid& m1, const Matroid& m2) {
  audit1_ = &m1;
  audit2_ = &m2;
}

void SumQueryCapability::audit_add(Mask current, int x,
                                   const char* what) const {
  if (!audit1_) return;
  if (contains(current, x)) {
    throw ContractError(std::string(what) +
                        ": element already in the base set");
  }
  if (!audit1_->independent(current) || !audit2_->independent(current)) {
    throw ContractError(std::string(what) +
                        ": base set is not common independent");
  }
}

bool SumQueryCapability::add_keeps_sum_flat(Mask current, int x) {
  audit_add(current, x, "add_keeps_sum_flat");
  oracle_->note_adapter_call();
  Mask grown = current | bit(x);
  if (backend_ == Backend::kRankSum) {
    return oracle_->rank_sum(grown) == 2 * count(current);
  }
  if (oracle_->common_independent(grown)) return false;
  return oracle_->rank_max(grown) == count(current);
}

bool SumQueryCapability::add_raises_sum_by_one(Mask current, int x) {
  audit_add(current, x, "add_raises_sum_by_one");
  oracle_->note_adapter_call();
  Mask grown = current | bit(x);
  if (backend_ == Backend::kRankSum) {
    return oracle_->rank_sum(grown) == 2 * count(current) + 1;
  }
  if (oracle_->common_independent(grown)) return false;
  return oracle_->rank_max(grown) == count(current) + 1;
}

bool SumQueryCapability::add_raises_sum_by_two(Mask current, int x) {
  audit_add(current, x, "add_raises_sum_by_two");
  oracle_->note_adapter_call();
  Mask grown = current | bit(x);
  if (backend_ == Backend::kRankSum) {
    return oracle_->rank_sum(grown) == 2 * count(current) + 2;
  }
  return oracle_->common_independent(grown);
}

bool SumQueryCapability::sum_saturated(Mask s) {
  oracle_->note_adapter_call();
  if (backend_ == Backend::kRankSum) {
    return oracle_->rank_sum(s) == 2 * count(s);
  }
  return oracle_->common_independent(s);
}

bool SumQueryCapability::source_or_sink(Mask current, int s) {
  audit_add(current, s, "source_or_sink");
  oracle_->note_adapter_call();
  Mask grown = current | bit(s);
  if (backend_ == Backend::kRankSum) {
    return oracle_->rank_sum(grown) >= 2 * count(current) + 1;
  }
  if (oracle_->common_independent(grown)) return true;
  return oracle_->rank_max(grown) == count(current) + 1;
}

}  // namespace mi
