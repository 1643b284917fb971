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

#include "mi/instance.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "mi/errors.hpp"

namespace mi {

namespace {

using json = nlohmann::json;

}  // namespace

const char* to_string(MatroidRecord::Kind kind) {
  switch (kind) {
    case MatroidRecord::Kind::kUniform:
      return "uniform";
    case MatroidRecord::Kind::kPartition:
      return "partition";
    case MatroidRecord::Kind::kGraphic:
      return "graphic";
    case MatroidRecord::Kind::kSplit:
      return "split";
    case MatroidRecord::Kind::kTruncation:
      return "truncation-of";
    case MatroidRecord::Kind::kDirectSum:
      return "direct-sum-of";
  }
  return "?";
}

Matroid build_matroid(const MatroidRecord& record) {
  switch (record.kind) {
    case MatroidRecord::Kind::kUniform:
      return make_uniform(record.n, record.rank);
    case MatroidRecord::Kind::kPartition:
      return make_partition(record.partition);
    case MatroidRecord::Kind::kGraphic:
      return make_graphic(record.graph);
    case MatroidRecord::Kind::kSplit:
      return make_split(record.split);
    case MatroidRecord::Kind::kTruncation:
      return truncate(build_matroid(record.parts.at(0)), record.trunc_k);
    case MatroidRecord::Kind::kDirectSum:
      return direct_sum(build_matroid(record.parts.at(0)),
                        build_matroid(record.parts.at(1)));
  }
  throw RepresentationError("unknown matroid record kind");
}

bool is_unit_partition(const MatroidRecord& record) {
  if (record.kind != MatroidRecord::Kind::kPartition) return false;
  return std::all_of(record.partition.capacities.begin(),
                     record.partition.capacities.end(),
                     [](int cap) { return cap == 1; });
}

bool is_split_record(const MatroidRecord& record) {
  return record.kind == MatroidRecord::Kind::kSplit;
}

MatroidRecord uniform_record(int n, int rank) {
  MatroidRecord record;
  record.kind = MatroidRecord::Kind::kUniform;
  record.n = n;
  record.rank = rank;
  return record;
}

MatroidRecord partition_record(PartitionRep rep) {
  MatroidRecord record;
  record.kind = MatroidRecord::Kind::kPartition;
  Mask covered = 0;
  for (Mask cls : rep.classes) covered |= cls;
  record.n = count(covered);
  record.partition = std::move(rep);
  return record;
}

MatroidRecord graphic_record(GraphRep rep) {
  MatroidRecord record;
  record.kind = MatroidRecord::Kind::kGraphic;
  record.n = static_cast<int>(rep.edges.size());
  record.graph = std::move(rep);
  return record;
}

MatroidRecord split_record(SplitRep rep) {
  MatroidRecord record;
  record.kind = MatroidRecord::Kind::kSplit;
  record.n = rep.n;
  record.split = std::move(rep);
  return record;
}

MatroidRecord truncation_record(MatroidRecord base, int k) {
  MatroidRecord record;
  record.kind = MatroidRecord::Kind::kTruncation;
  record.n = base.n;
  record.trunc_k = k;
  record.parts.push_back(std::move(base));
  return record;
}

MatroidRecord direct_sum_record(MatroidRecord first, MatroidRecord second) {
  MatroidRecord record;
  record.kind = MatroidRecord::Kind::kDirectSum;
  record.n = first.n + second.n;
  record.offset = first.n;
  record.parts.push_back(std::move(first));
  record.parts.push_back(std::move(second));
  return record;
}

namespace {

json mask_to_json(Mask m) {
  json out = json::array();
  for (int e : elements(m)) out.push_back(e);
  return out;
}

json record_to_json(const MatroidRecord& record) {
  json out;
  out["kind"] = to_string(record.kind);
  out["n"] = record.n;
  switch (record.kind) {
    case MatroidRecord::Kind::kUniform:
      out["rank"] = record.rank;
      break;
    case MatroidRecord::Kind::kPartition: {
      json classes = json::array();
      for (Mask cls : record.partition.classes) classes.push_back(mask_to_json(cls));
      out["classes"] = std::move(classes);
      out["capacities"] = record.partition.capacities;
      break;
    }
    case MatroidRecord::Kind::kGraphic: {
      out["vertices"] = record.graph.vertices;
      json edges = json::array();
      for (auto [u, v] : record.graph.edges) edges.push_back(json::array({u, v}));
      out["edges"] = std::move(edges);
      break;
    }
    case MatroidRecord::Kind::kSplit: {
      out["rank"] = record.split.rank;
      json hyper = json::array();
      for (Mask h : record.split.hyperedges) hyper.push_back(mask_to_json(h));
      out["hyperedges"] = std::move(hyper);
      out["bounds"] = record.split.bounds;
      break;
    }
    case MatroidRecord::Kind::kTruncation:
      out["k"] = record.trunc_k;
      out["of"] = record_to_json(record.parts.at(0));
      break;
    case MatroidRecord::Kind::kDirectSum:
      out["offset"] = record.offset;
      out["first"] = record_to_json(record.parts.at(0));
      out["second"] = record_to_json(record.parts.at(1));
      break;
  }
  return out;
}

const json& get_field(const json& obj, const char* key,
                      const std::string& where) {
  if (!obj.is_object()) {
    throw SchemaError(where + ": expected an object");
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(where + ": missing field '" + key + "'");
  }
  return *it;
}

long long get_integer(const json& obj, const char* key,
                      const std::string& where) {
  const json& field = get_field(obj, key, where);
  if (!field.is_number_integer()) {
    throw SchemaError(where + "." + key + ": expected an integer");
  }
  return field.get<long long>();
}

int get_small_int(const json& obj, const char* key, const std::string& where,
                  long long lo, long long hi) {
  long long value = get_integer(obj, key, where);
  if (value < lo || value > hi) {
    throw SchemaError(where + "." + key + ": value " + std::to_string(value) +
                      " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  return static_cast<int>(value);
}

Mask mask_from_json(const json& arr, int n, const std::string& where) {
  if (!arr.is_array()) {
    throw SchemaError(where + ": expected an array of elements");
  }
  Mask out = 0;
  for (const json& item : arr) {
    if (!item.is_number_integer()) {
      throw SchemaError(where + ": elements must be integers");
    }
    long long e = item.get<long long>();
    if (e < 0 || e >= n) {
      throw SchemaError(where + ": element " + std::to_string(e) +
                        " outside ground set of size " + std::to_string(n));
    }
    if (contains(out, static_cast<int>(e))) {
      throw SchemaError(where + ": duplicate element " + std::to_string(e));
    }
    out |= bit(static_cast<int>(e));
  }
  return out;
}

std::vector<int> int_list_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array()) {
    throw SchemaError(where + ": expected an array of integers");
  }
  std::vector<int> out;
  for (const json& item : arr) {
    if (!item.is_number_integer()) {
      throw SchemaError(where + ": entries must be integers");
    }
    out.push_back(item.get<int>());
  }
  return out;
}

MatroidRecord record_from_json(const json& obj, const std::string& where,
                               int expected_n) {
  const json& kind_field = get_field(obj, "kind", where);
  if (!kind_field.is_string()) {
    throw SchemaError(where + ".kind: expected a string");
  }
  std::string kind = kind_field.get<std::string>();
  int n = get_small_int(obj, "n", where, 1, kMaxGroundSize);
  if (n != expected_n) {
    throw SchemaError(where + ".n: expected " + std::to_string(expected_n) +
                      ", got " + std::to_string(n));
  }

  if (kind == "uniform") {
    return uniform_record(n, get_small_int(obj, "rank", where, 0, n));
  }
  if (kind == "partition") {
    const json& classes = get_field(obj, "classes", where);
    if (!classes.is_array()) {
      throw SchemaError(where + ".classes: expected an array");
    }
    PartitionRep rep;
    int index = 0;
    Mask covered = 0;
    for (const json& cls : classes) {
      Mask parsed = mask_from_json(
          cls, n, where + ".classes[" + std::to_string(index++) + "]");
      covered |= parsed;
      rep.classes.push_back(parsed);
    }
    if (covered != full_mask(n)) {
      throw SchemaError(where + ".classes: classes must cover all of 0.." +
                        std::to_string(n - 1));
    }
    rep.capacities =
        int_list_from_json(get_field(obj, "capacities", where),
                           where + ".capacities");
    return partition_record(std::move(rep));
  }
  if (kind == "graphic") {
    GraphRep rep;
    rep.vertices = get_small_int(obj, "vertices", where, 1, 1 << 16);
    const json& edges = get_field(obj, "edges", where);
    if (!edges.is_array()) {
      throw SchemaError(where + ".edges: expected an array");
    }
    int index = 0;
    for (const json& edge : edges) {
      std::string edge_where =
          where + ".edges[" + std::to_string(index++) + "]";
      if (!edge.is_array() || edge.size() != 2 ||
          !edge[0].is_number_integer() || !edge[1].is_number_integer()) {
        throw SchemaError(edge_where + ": expected a [u, v] pair");
      }
      rep.edges.emplace_back(edge[0].get<int>(), edge[1].get<int>());
    }
    if (static_cast<int>(rep.edges.size()) != n) {
      throw SchemaError(where + ".edges: expected " + std::to_string(n) +
                        " edges, got " + std::to_string(rep.edges.size()));
    }
    return graphic_record(std::move(rep));
  }
  if (kind == "split") {
    SplitRep rep;
    rep.n = n;
    rep.rank = get_small_int(obj, "rank", where, 0, n);
    const json& hyper = get_field(obj, "hyperedges", where);
    if (!hyper.is_array()) {
      throw SchemaError(where + ".hyperedges: expected an array");
    }
    int index = 0;
    for (const json& h : hyper) {
      rep.hyperedges.push_back(mask_from_json(
          h, n, where + ".hyperedges[" + std::to_string(index++) + "]"));
    }
    rep.bounds = int_list_from_json(get_field(obj, "bounds", where),
                                    where + ".bounds");
    return split_record(std::move(rep));
  }
  if (kind == "truncation-of") {
    int k = get_small_int(obj, "k", where, 0, kMaxGroundSize);
    MatroidRecord base =
        record_from_json(get_field(obj, "of", where), where + ".of", n);
    return truncation_record(std::move(base), k);
  }
  if (kind == "direct-sum-of") {
    int offset = get_small_int(obj, "offset", where, 1, n - 1);
    MatroidRecord first = record_from_json(get_field(obj, "first", where),
                                           where + ".first", offset);
    MatroidRecord second = record_from_json(get_field(obj, "second", where),
                                            where + ".second", n - offset);
    return direct_sum_record(std::move(first), std::move(second));
  }
  throw SchemaError(where + ".kind: unknown kind '" + kind + "'");
}

json instance_to_json(const Instance& instance) {
  json out;
  out["n"] = instance.n;
  out["weights"] = instance.weights;
  out["m1"] = record_to_json(instance.m1);
  out["m2"] = record_to_json(instance.m2);
  return out;
}

Instance instance_from_json(const json& obj, const std::string& where) {
  Instance instance;
  instance.n = get_small_int(obj, "n", where, 1, kMaxGroundSize);
  const json& weights = get_field(obj, "weights", where);
  if (!weights.is_array() ||
      static_cast<int>(weights.size()) != instance.n) {
    throw SchemaError(where + ".weights: expected an array of " +
                      std::to_string(instance.n) + " integers");
  }
  for (const json& value : weights) {
    if (!value.is_number_integer()) {
      throw SchemaError(where + ".weights: entries must be integers");
    }
    instance.weights.push_back(value.get<long long>());
  }
  instance.m1 = record_from_json(get_field(obj, "m1", where), where + ".m1",
                                 instance.n);
  instance.m2 = record_from_json(get_field(obj, "m2", where), where + ".m2",
                                 instance.n);
  // Surface invalid constructions (loops, bad partitions, hypergraph
  // condition violations) at parse time, with the field path attached.
  try {
    build_matroid(instance.m1);
  } catch (const RepresentationError& error) {
    throw RepresentationError(where + ".m1: " + error.what());
  }
  try {
    build_matroid(instance.m2);
  } catch (const RepresentationError& error) {
    throw RepresentationError(where + ".m2: " + error.what());
  }
  return instance;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& error) {
    throw SchemaError(std::string("instance is not valid JSON: ") +
                      error.what());
  }
  return instance_from_json(parsed, "instance");
}

std::string emit_instance(const Instance& instance) {
  return instance_to_json(instance).dump(2) + "\n";
}

namespace {

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return lo +
         static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

long long rand_weight(std::mt19937_64& rng, long long lo, long long hi) {
  return lo +
         static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

MatroidRecord gen_uniform(std::mt19937_64& rng, int n) {
  return uniform_record(n, rand_int(rng, 1, n));
}

MatroidRecord gen_partition(std::mt19937_64& rng, int n, bool unit) {
  int groups = rand_int(rng, 1, n);
  std::vector<Mask> buckets(static_cast<std::size_t>(groups), 0);
  for (int e = 0; e < n; ++e) {
    buckets[static_cast<std::size_t>(rand_int(rng, 0, groups - 1))] |= bit(e);
  }
  PartitionRep rep;
  for (Mask bucket : buckets) {
    if (bucket == 0) continue;
    rep.classes.push_back(bucket);
    rep.capacities.push_back(unit ? 1 : rand_int(rng, 1, count(bucket)));
  }
  return partition_record(std::move(rep));
}

MatroidRecord gen_graphic(std::mt19937_64& rng, int n) {
  int vertices = rand_int(rng, 2, std::min(n + 1, 8));
  GraphRep rep;
  rep.vertices = vertices;
  for (int e = 0; e < n; ++e) {
    int u = rand_int(rng, 0, vertices - 1);
    int v = rand_int(rng, 0, vertices - 2);
    if (v >= u) ++v;
    rep.edges.emplace_back(u, v);
  }
  return graphic_record(std::move(rep));
}

MatroidRecord gen_split(std::mt19937_64& rng, int n) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    SplitRep rep;
    rep.n = n;
    rep.rank = rand_int(rng, 1, n);
    int hyperedges = rand_int(rng, 0, 3);
    bool ok = true;
    for (int i = 0; i < hyperedges; ++i) {
      Mask h = static_cast<Mask>(rng()) & full_mask(n);
      if (h == 0) continue;
      int floor_bound = std::max(1, rep.rank - (n - count(h)));
      if (floor_bound > rep.rank) {
        ok = false;
        break;
      }
      rep.hyperedges.push_back(h);
      rep.bounds.push_back(rand_int(rng, floor_bound, rep.rank));
    }
    if (!ok) continue;
    try {
      validate_split_rep(rep);
    } catch (const RepresentationError&) {
      continue;
    }
    return split_record(std::move(rep));
  }
  // A bare rank bound always satisfies the hypergraph conditions.
  SplitRep rep;
  rep.n = n;
  rep.rank = rand_int(rng, 1, n);
  return split_record(std::move(rep));
}

MatroidRecord gen_basic(std::mt19937_64& rng, int n) {
  switch (rand_int(rng, 0, 2)) {
    case 0:
      return gen_uniform(rng, n);
    case 1:
      return gen_partition(rng, n, rand_int(rng, 0, 1) == 0);
    default:
      return gen_graphic(rng, n);
  }
}

MatroidRecord gen_mixed(std::mt19937_64& rng, int n) {
  int choice = rand_int(rng, 0, 9);
  if (n < 2 && choice >= 8) choice = 0;
  switch (choice) {
    case 0:
    case 1:
      return gen_uniform(rng, n);
    case 2:
      return gen_partition(rng, n, true);
    case 3:
      return gen_partition(rng, n, false);
    case 4:
    case 5:
      return gen_graphic(rng, n);
    case 6:
    case 7:
      return gen_split(rng, n);
    case 8:
      return truncation_record(gen_basic(rng, n), rand_int(rng, 1, n));
    default: {
      int left = rand_int(rng, 1, n - 1);
      return direct_sum_record(gen_basic(rng, left), gen_basic(rng, n - left));
    }
  }
}

void gen_matching_pair(std::mt19937_64& rng, int n, MatroidRecord& m1,
                       MatroidRecord& m2) {
  int left = rand_int(rng, 1, std::max(1, (n + 1) / 2));
  int right = rand_int(rng, 1, std::max(1, (n + 1) / 2));
  std::vector<Mask> by_left(static_cast<std::size_t>(left), 0);
  std::vector<Mask> by_right(static_cast<std::size_t>(right), 0);
  for (int e = 0; e < n; ++e) {
    by_left[static_cast<std::size_t>(rand_int(rng, 0, left - 1))] |= bit(e);
    by_right[static_cast<std::size_t>(rand_int(rng, 0, right - 1))] |= bit(e);
  }
  auto to_partition = [](const std::vector<Mask>& groups) {
    PartitionRep rep;
    for (Mask group : groups) {
      if (group == 0) continue;
      rep.classes.push_back(group);
      rep.capacities.push_back(1);
    }
    return partition_record(std::move(rep));
  };
  m1 = to_partition(by_left);
  m2 = to_partition(by_right);
}

}  // namespace

Instance generate_instance(const GeneratorConfig& config) {
  if (config.n < 1 || config.n > kMaxGroundSize) {
    throw RepresentationError("generator n must be in [1, 64]");
  }
  if (config.weight_min > config.weight_max) {
    throw RepresentationError("generator weight range is empty");
  }
  std::mt19937_64 rng(config.seed);
  Instance instance;
  instance.n = config.n;
  if (config.profile == "mixed") {
    instance.m1 = gen_mixed(rng, config.n);
    instance.m2 = gen_mixed(rng, config.n);
  } else if (config.profile == "partition") {
    instance.m1 = gen_partition(rng, config.n, true);
    instance.m2 = gen_mixed(rng, config.n);
  } else if (config.profile == "split") {
    instance.m1 = gen_split(rng, config.n);
    instance.m2 = gen_mixed(rng, config.n);
  } else if (config.profile == "matching") {
    gen_matching_pair(rng, config.n, instance.m1, instance.m2);
  } else {
    throw RepresentationError("unknown generator profile '" + config.profile +
                              "'");
  }
  for (int e = 0; e < config.n; ++e) {
    instance.weights.push_back(
        rand_weight(rng, config.weight_min, config.weight_max));
  }
  return instance;
}

namespace {

json counters_to_json(const QueryCounters& counters) {
  json out;
  out["sum"] = counters.sum;
  out["min"] = counters.min;
  out["max"] = counters.max;
  out["ci"] = counters.ci;
  out["adapter"] = counters.adapter;
  return out;
}

}  // namespace

std::string format_report(const SolveReport& report) {
  std::ostringstream out;
  out << "oracle: " << to_string(report.oracle) << "\n";
  out << "n: " << report.n << "\n";
  out << "mode: " << (report.weighted ? "weighted" : "unweighted") << "\n";
  out << "per-size optima:\n";
  for (const SizeEntry& entry : report.per_size) {
    out << "  size " << entry.size << ": weight " << entry.weight << ", set "
        << to_string(entry.set) << "\n";
  }
  out << "max cardinality: " << report.max_cardinality << ", set "
      << to_string(report.max_cardinality_set) << "\n";
  if (report.weighted) {
    out << "optimum: weight " << report.best_weight << " at size "
        << report.best_size << ", set " << to_string(report.best_set) << "\n";
  }
  if (report.certificate) {
    out << "certificate: " << to_string(*report.certificate) << "\n";
  }
  out << "augmentations: " << report.augmentations << "\n";
  out << "queries: sum=" << report.queries.sum << " min=" << report.queries.min
      << " max=" << report.queries.max << " ci=" << report.queries.ci
      << " adapter=" << report.queries.adapter << "\n";
  return out.str();
}

std::string report_to_json(const SolveReport& report) {
  json out;
  out["oracle"] = to_string(report.oracle);
  out["n"] = report.n;
  out["weighted"] = report.weighted;
  json per_size = json::array();
  for (const SizeEntry& entry : report.per_size) {
    json row;
    row["size"] = entry.size;
    row["weight"] = entry.weight;
    row["set"] = mask_to_json(entry.set);
    per_size.push_back(std::move(row));
  }
  out["per_size"] = std::move(per_size);
  out["max_cardinality"] = report.max_cardinality;
  out["max_cardinality_set"] = mask_to_json(report.max_cardinality_set);
  out["best_size"] = report.best_size;
  out["best_weight"] = report.best_weight;
  out["best_set"] = mask_to_json(report.best_set);
  if (report.certificate) {
    out["certificate"] = mask_to_json(*report.certificate);
  }
  out["augmentations"] = report.augmentations;
  out["queries"] = counters_to_json(report.queries);
  return out.dump(2) + "\n";
}

std::string emit_witness(const SeparationWitness& witness) {
  auto witness_record = [&](const GraphRep& g) {
    MatroidRecord base = graphic_record(g);
    if (witness.truncated) return truncation_record(std::move(base), 3);
    return base;
  };
  auto witness_instance = [&](const GraphRep& g1, const GraphRep& g2) {
    Instance instance;
    instance.n = static_cast<int>(g1.edges.size());
    instance.weights.assign(static_cast<std::size_t>(instance.n), 0);
    instance.m1 = witness_record(g1);
    instance.m2 = witness_record(g2);
    return instance_to_json(instance);
  };
  json annotation;
  annotation["target"] = to_string(witness.target);
  json agreeing = json::array();
  for (OracleKind kind : witness.agreeing) agreeing.push_back(to_string(kind));
  annotation["agreeing"] = std::move(agreeing);
  annotation["truncated"] = witness.truncated;
  annotation["differing_subset"] = mask_to_json(witness.differing_subset);
  annotation["target_value_a"] = witness.value_a;
  annotation["target_value_b"] = witness.value_b;
  json out;
  out["annotation"] = std::move(annotation);
  out["instance_a"] = witness_instance(witness.first_a, witness.second_a);
  out["instance_b"] = witness_instance(witness.first_b, witness.second_b);
  return out.dump(2) + "\n";
}

}  // namespace mi
