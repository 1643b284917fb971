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

#include <cstdint>
#include <string>
#include <vector>

#include "mi/solvers.hpp"
#include "mi/verify.hpp"
#include "mi/zoo.hpp"

namespace mi {

// Serializable matroid construction. Truncation wraps one child record,
// a direct sum holds two with the second ground set shifted by `offset`.
struct MatroidRecord {
  enum class Kind {
    kUniform,
    kPartition,
    kGraphic,
    kSplit,
    kTruncation,
    kDirectSum,
  };

  Kind kind = Kind::kUniform;
  int n = 0;
  int rank = 0;                      // uniform
  PartitionRep partition;            // partition
  GraphRep graph;                    // graphic
  SplitRep split;                    // split
  int trunc_k = 0;                   // truncation
  int offset = 0;                    // direct sum
  std::vector<MatroidRecord> parts;  // truncation: 1 child, direct sum: 2
};

const char* to_string(MatroidRecord::Kind kind);

// Builds the matroid a record stands for; construction errors surface as
// RepresentationError.
Matroid build_matroid(const MatroidRecord& record);

// Structural declarations the restricted solvers rely on. They cannot be
// checked through a restricted oracle, so the record in the instance file
// is the authority.
bool is_unit_partition(const MatroidRecord& record);
bool is_split_record(const MatroidRecord& record);

MatroidRecord uniform_record(int n, int rank);
MatroidRecord partition_record(PartitionRep rep);
MatroidRecord graphic_record(GraphRep rep);
MatroidRecord split_record(SplitRep rep);
MatroidRecord truncation_record(MatroidRecord base, int k);
MatroidRecord direct_sum_record(MatroidRecord first, MatroidRecord second);

// One solvable unit: ground size, integer weights, two matroid records.
struct Instance {
  int n = 0;
  WeightVec weights;
  MatroidRecord m1, m2;
};

// Parses instance JSON; schema problems raise SchemaError naming the field,
// invalid constructions raise RepresentationError. Both matroids are built
// once during parsing so every error surfaces here.
Instance parse_instance(const std::string& text);

// Canonical form: sorted object keys, two-space indent, class and
// hyperedge element lists ascending. emit(parse(t)) is a fixed point.
std::string emit_instance(const Instance& instance);

// Deterministic instance generation: identical config, identical bytes.
// Profiles: "mixed" draws both matroids from the whole zoo, "partition"
// forces a unit-capacity partition first matroid, "split" a valid
// elementary split first matroid, "matching" encodes a random bipartite
// graph as two unit partitions.
struct GeneratorConfig {
  std::uint64_t seed = 1;
  int n = 8;
  std::string profile = "mixed";
  long long weight_min = -10;
  long long weight_max = 10;
};

Instance generate_instance(const GeneratorConfig& config);

// Report rendering for the command-line surface.
std::string format_report(const SolveReport& report);
std::string report_to_json(const SolveReport& report);

// Witness fixture: the two instances in the regular schema plus an
// annotation block describing the separation.
std::string emit_witness(const SeparationWitness& witness);

}  // namespace mi
