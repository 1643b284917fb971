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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace mi {

// Subsets of the ground set are single-word bitmasks; element i <-> bit i.
// Ground sets are capped at 64 elements so every subset fits in one word.
using Mask = std::uint64_t;

inline constexpr int kMaxGroundSize = 64;

constexpr Mask bit(int e) { return Mask{1} << e; }

constexpr bool contains(Mask m, int e) { return (m >> e) & Mask{1}; }

constexpr int count(Mask m) { return std::popcount(m); }

constexpr Mask full_mask(int n) {
  return n >= kMaxGroundSize ? ~Mask{0} : (Mask{1} << n) - 1;
}

// Lexicographic order on the ascending element sequences of two sets:
// the set owning the smallest element outside the common prefix wins,
// and a proper prefix is smaller than its extensions.
constexpr bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  Mask d = a ^ b;
  Mask low = d & (~d + 1);
  Mask above = ~(low | (low - 1));
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

inline std::vector<int> elements(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count(m)));
  for (Mask rest = m; rest; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

inline std::string to_string(Mask m) {
  std::string out = "{";
  bool first = true;
  for (Mask rest = m; rest; rest &= rest - 1) {
    if (!first) out += ",";
    out += std::to_string(std::countr_zero(rest));
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace mi
