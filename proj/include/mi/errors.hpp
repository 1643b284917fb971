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

#include <stdexcept>

namespace mi {

// Invalid matroid payload (bad partition, hypergraph conditions, loops, ...).
struct RepresentationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Query issued against an oracle kind that does not support it.
struct CapabilityError : std::logic_error {
  using std::logic_error::logic_error;
};

// A caller-side precondition did not hold.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// Instance text failed schema validation.
struct SchemaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exhaustive enumeration beyond the configured limit.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mi
