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

#include "mi/solvers.hpp"

#include <algorithm>
#include <utility>

#include "mi/errors.hpp"
#include "mi/exchange_graph.hpp"

namespace mi {

bool PathSeq::has(int e) const {
  return std::find(elems.begin(), elems.end(), e) != elems.end();
}

Mask PathSeq::mask() const {
  Mask m = 0;
  for (int e : elems) m |= bit(e);
  return m;
}

bool path_better(const PathSeq& a, const PathSeq& b) {
  if (a.null()) return false;
  if (b.null()) return true;
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.length() != b.length()) return a.length() < b.length();
  return a.elems < b.elems;
}

namespace {

QueryCounters counters_delta(const QueryCounters& before,
                             const QueryCounters& after) {
  QueryCounters d;
  d.sum = after.sum - before.sum;
  d.min = after.min - before.min;
  d.max = after.max - before.max;
  d.ci = after.ci - before.ci;
  d.adapter = after.adapter - before.adapter;
  return d;
}

void finalize_report(SolveReport& rep) {
  const SizeEntry& last = rep.per_size.back();
  rep.max_cardinality = last.size;
  rep.max_cardinality_set = last.set;
  if (rep.weighted) {
    rep.best_size = rep.per_size.front().size;
    rep.best_set = rep.per_size.front().set;
    rep.best_weight = rep.per_size.front().weight;
    for (const SizeEntry& entry : rep.per_size) {
      if (entry.weight > rep.best_weight) {
        rep.best_size = entry.size;
        rep.best_set = entry.set;
        rep.best_weight = entry.weight;
      }
    }
  } else {
    rep.best_size = last.size;
    rep.best_set = last.set;
    rep.best_weight = last.weight;
  }
}

}  // namespace

bool same_solution(const SolveReport& a, const SolveReport& b) {
  if (a.n != b.n || a.weighted != b.weighted) return false;
  if (a.per_size.size() != b.per_size.size()) return false;
  for (std::size_t k = 0; k < a.per_size.size(); ++k) {
    if (a.per_size[k].size != b.per_size[k].size ||
        a.per_size[k].set != b.per_size[k].set ||
        a.per_size[k].weight != b.per_size[k].weight) {
      return false;
    }
  }
  return a.max_cardinality == b.max_cardinality &&
         a.max_cardinality_set == b.max_cardinality_set &&
         a.best_size == b.best_size && a.best_set == b.best_set &&
         a.best_weight == b.best_weight &&
         a.augmentations == b.augmentations;
}

std::optional<PathSeq> rank_sum_path_search(SumQueryCapability& cap,
                                            const WeightVec& w, Mask current,
                                            int source,
                                            const SolverHooks* hooks) {
  const int n = cap.size();
  const Mask outside = full_mask(n) & ~current;
  std::vector<PathSeq> label(static_cast<std::size_t>(n));

  auto assign = [&](int e, PathSeq value) {
    label[static_cast<std::size_t>(e)] = std::move(value);
    if (hooks && hooks->on_label_update) {
      hooks->on_label_update(current, source,
                             label[static_cast<std::size_t>(e)]);
    }
  };
  auto extended = [&](const PathSeq& base, int e) {
    PathSeq grown = base;
    grown.elems.push_back(e);
    grown.cost += element_cost(w, current, e);
    return grown;
  };
  // The prefix of a recorded sequence, minus its last element, is a smaller
  // common independent exchange; predicates about the whole sequence are
  // asked relative to it.
  auto prefix_exchange = [&](const PathSeq& p) {
    return current ^ (p.mask() ^ bit(p.last()));
  };

  assign(source, PathSeq{{source}, element_cost(w, current, source)});

  for (int round = 1; round <= n - 1; ++round) {
    if (round % 2 == 1) {
      // Pull the best sequence ending outside onto an inside element.
      for (Mask yrest = current; yrest; yrest &= yrest - 1) {
        int y = std::countr_zero(yrest);
        const PathSeq* best = nullptr;
        for (Mask xrest = outside; xrest; xrest &= xrest - 1) {
          int x = std::countr_zero(xrest);
          const PathSeq& px = label[static_cast<std::size_t>(x)];
          if (px.null() || px.has(y)) continue;
          if (!cap.add_raises_sum_by_one(prefix_exchange(px), x)) continue;
          if (!cap.sum_saturated(current ^ px.mask() ^ bit(y))) continue;
          if (!best || path_better(px, *best)) best = &px;
        }
        if (!best) continue;
        PathSeq cand = extended(*best, y);
        PathSeq& py = label[static_cast<std::size_t>(y)];
        if (py.null() || cand.cost < py.cost) assign(y, std::move(cand));
      }
    } else {
      // Pull the best sequence ending inside onto an outside element. The
      // two-part condition distinguishes whether the outside element
      // extends neither hidden matroid or exactly one of them.
      for (Mask xrest = outside; xrest; xrest &= xrest - 1) {
        int x = std::countr_zero(xrest);
        const PathSeq* best = nullptr;
        for (Mask yrest = current; yrest; yrest &= yrest - 1) {
          int y = std::countr_zero(yrest);
          const PathSeq& py = label[static_cast<std::size_t>(y)];
          if (py.null() || py.has(x)) continue;
          bool ok = false;
          if (cap.add_keeps_sum_flat(current, x)) {
            ok = cap.add_raises_sum_by_one(current ^ py.mask(), x);
          } else if (cap.add_raises_sum_by_one(current, x)) {
            ok = cap.add_raises_sum_by_two(current ^ py.mask(), x);
          }
          if (!ok) continue;
          if (!best || path_better(py, *best)) best = &py;
        }
        if (!best) continue;
        PathSeq cand = extended(*best, x);
        PathSeq& px = label[static_cast<std::size_t>(x)];
        if (px.null() || cand.cost < px.cost) assign(x, std::move(cand));
      }
    }
  }

  const PathSeq* best = nullptr;
  for (Mask xrest = outside; xrest; xrest &= xrest - 1) {
    int x = std::countr_zero(xrest);
    const PathSeq& px = label[static_cast<std::size_t>(x)];
    if (px.null()) continue;
    if (!cap.add_raises_sum_by_two(prefix_exchange(px), x)) continue;
    if (!best || path_better(px, *best)) best = &px;
  }
  if (!best) return std::nullopt;
  return *best;
}

std::optional<Mask> augment_rank_sum(SumQueryCapability& cap,
                                     const WeightVec& w, Mask current,
                                     const SolverHooks* hooks) {
  const Mask outside = full_mask(cap.size()) & ~current;
  PathSeq best;
  for (Mask rest = outside; rest; rest &= rest - 1) {
    int s = std::countr_zero(rest);
    if (!cap.source_or_sink(current, s)) continue;
    if (auto found = rank_sum_path_search(cap, w, current, s, hooks)) {
      if (path_better(*found, best)) best = std::move(*found);
    }
  }
  if (best.null()) return std::nullopt;
  return current ^ best.mask();
}

namespace {

SolveReport run_sum_style_driver(RestrictedOracle& oracle, const WeightVec& w,
                                 const SolverHooks* hooks) {
  SumQueryCapability cap(oracle);
  SolveReport rep;
  rep.n = oracle.size();
  rep.oracle = oracle.kind();
  rep.weighted = true;
  QueryCounters before = oracle.counters();
  Mask current = 0;
  rep.per_size.push_back({0, 0, 0});
  while (auto grown = augment_rank_sum(cap, w, current, hooks)) {
    current = *grown;
    rep.per_size.push_back({count(current), current, weight_of(w, current)});
    ++rep.augmentations;
  }
  rep.queries = counters_delta(before, oracle.counters());
  finalize_report(rep);
  return rep;
}

}  // namespace

SolveReport solve_rank_sum(RestrictedOracle& oracle, const WeightVec& w,
                           const SolverHooks* hooks) {
  if (oracle.kind() != OracleKind::kSum &&
      oracle.kind() != OracleKind::kFullPair) {
    throw CapabilityError("solve_rank_sum needs a sum oracle");
  }
  return run_sum_style_driver(oracle, w, hooks);
}

SolveReport solve_ci_max(RestrictedOracle& oracle, const WeightVec& w,
                         const SolverHooks* hooks) {
  if (oracle.kind() != OracleKind::kCiMax) {
    throw CapabilityError("solve_ci_max needs a ci-max oracle");
  }
  return run_sum_style_driver(oracle, w, hooks);
}

namespace {

void require_ci_capable(const RestrictedOracle& oracle, const char* who) {
  if (oracle.kind() != OracleKind::kCi && oracle.kind() != OracleKind::kCiMax &&
      oracle.kind() != OracleKind::kFullPair) {
    throw CapabilityError(std::string(who) +
                          " needs a common-independence oracle");
  }
}

}  // namespace

std::optional<std::vector<int>> ci_bfs_path(RestrictedOracle& oracle,
                                            Mask current, int source,
                                            const SolverHooks* hooks) {
  require_ci_capable(oracle, "ci_bfs_path");
  const int n = oracle.size();
  const Mask outside = full_mask(n) & ~current;

  if (oracle.common_independent(current | bit(source))) {
    return std::vector<int>{source};
  }

  std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
  auto assign = [&](int y, std::vector<int> seq) {
    label[static_cast<std::size_t>(y)] = std::move(seq);
    if (hooks && hooks->on_bfs_label) {
      hooks->on_bfs_label(current, source, label[static_cast<std::size_t>(y)]);
    }
  };
  auto seq_mask = [](const std::vector<int>& seq) {
    Mask m = 0;
    for (int e : seq) m |= bit(e);
    return m;
  };

  for (Mask rest = current; rest; rest &= rest - 1) {
    int y = std::countr_zero(rest);
    if (oracle.common_independent((current | bit(source)) & ~bit(y))) {
      assign(y, {source, y});
    }
  }

  for (int level = 1; level <= n; ++level) {
    std::vector<int> frontier;
    for (Mask rest = current; rest; rest &= rest - 1) {
      int y = std::countr_zero(rest);
      if (static_cast<int>(label[static_cast<std::size_t>(y)].size()) ==
          2 * level) {
        frontier.push_back(y);
      }
    }
    if (frontier.empty()) return std::nullopt;

    // First try to finish: append one outside element that conflicts with
    // the frontier endpoint yet completes a larger common independent set.
    for (int tip : frontier) {
      const std::vector<int>& path = label[static_cast<std::size_t>(tip)];
      Mask pmask = seq_mask(path);
      for (Mask xrest = outside & ~pmask; xrest; xrest &= xrest - 1) {
        int x = std::countr_zero(xrest);
        if (oracle.common_independent(bit(tip) | bit(x))) continue;
        if (oracle.common_independent(current ^ (pmask | bit(x)))) {
          std::vector<int> done = path;
          done.push_back(x);
          if (hooks && hooks->on_bfs_label) {
            hooks->on_bfs_label(current, source, done);
          }
          return done;
        }
      }
    }

    // Otherwise grow the next level of inside elements.
    for (int tip : frontier) {
      const std::vector<int>& path = label[static_cast<std::size_t>(tip)];
      Mask pmask = seq_mask(path);
      for (Mask xrest = outside & ~pmask; xrest; xrest &= xrest - 1) {
        int x = std::countr_zero(xrest);
        if (oracle.common_independent(bit(tip) | bit(x))) continue;
        for (Mask yrest = current; yrest; yrest &= yrest - 1) {
          int y = std::countr_zero(yrest);
          if (!label[static_cast<std::size_t>(y)].empty()) continue;
          if (oracle.common_independent(current ^
                                        (pmask | bit(x) | bit(y)))) {
            std::vector<int> grown = path;
            grown.push_back(x);
            grown.push_back(y);
            assign(y, std::move(grown));
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Mask> augment_ci_partition(RestrictedOracle& oracle,
                                         Mask current,
                                         const SolverHooks* hooks) {
  require_ci_capable(oracle, "augment_ci_partition");
  const Mask outside = full_mask(oracle.size()) & ~current;
  for (Mask rest = outside; rest; rest &= rest - 1) {
    int x = std::countr_zero(rest);
    if (oracle.common_independent(current | bit(x))) {
      return current | bit(x);
    }
  }
  for (Mask rest = outside; rest; rest &= rest - 1) {
    int s = std::countr_zero(rest);
    if (auto path = ci_bfs_path(oracle, current, s, hooks)) {
      Mask pmask = 0;
      for (int e : *path) pmask |= bit(e);
      return current ^ pmask;
    }
  }
  return std::nullopt;
}

SolveReport solve_ci_partition(RestrictedOracle& oracle,
                               const WeightVec& w_for_report,
                               const SolverHooks* hooks) {
  require_ci_capable(oracle, "solve_ci_partition");
  SolveReport rep;
  rep.n = oracle.size();
  rep.oracle = oracle.kind();
  rep.weighted = false;
  QueryCounters before = oracle.counters();
  Mask current = 0;
  rep.per_size.push_back({0, 0, 0});
  while (auto grown = augment_ci_partition(oracle, current, hooks)) {
    current = *grown;
    rep.per_size.push_back(
        {count(current), current, weight_of(w_for_report, current)});
    ++rep.augmentations;
  }
  rep.queries = counters_delta(before, oracle.counters());
  finalize_report(rep);
  return rep;
}

std::optional<Mask> augment_ci_split(RestrictedOracle& oracle,
                                     const WeightVec& w, Mask current) {
  require_ci_capable(oracle, "augment_ci_split");
  const Mask outside = full_mask(oracle.size()) & ~current;
  std::optional<Mask> best;
  long long best_weight = 0;
  auto consider = [&](Mask cand) {
    long long cw = weight_of(w, cand);
    if (!best || cw > best_weight || (cw == best_weight && lex_less(cand, *best))) {
      best = cand;
      best_weight = cw;
    }
  };
  for (Mask rest = outside; rest; rest &= rest - 1) {
    int x = std::countr_zero(rest);
    Mask cand = current | bit(x);
    if (oracle.common_independent(cand)) consider(cand);
  }
  // When the structured matroid is elementary split, any useful augmenting
  // path has at most three vertices, so two additions plus one removal
  // cover everything beyond plain additions.
  for (Mask r1 = outside; r1; r1 &= r1 - 1) {
    int x1 = std::countr_zero(r1);
    for (Mask r2 = r1 & (r1 - 1); r2; r2 &= r2 - 1) {
      int x2 = std::countr_zero(r2);
      for (Mask ry = current; ry; ry &= ry - 1) {
        int y = std::countr_zero(ry);
        Mask cand = (current | bit(x1) | bit(x2)) ^ bit(y);
        if (oracle.common_independent(cand)) consider(cand);
      }
    }
  }
  return best;
}

SolveReport solve_ci_split(RestrictedOracle& oracle, const WeightVec& w) {
  require_ci_capable(oracle, "solve_ci_split");
  SolveReport rep;
  rep.n = oracle.size();
  rep.oracle = oracle.kind();
  rep.weighted = true;
  QueryCounters before = oracle.counters();
  Mask current = 0;
  rep.per_size.push_back({0, 0, 0});
  while (auto grown = augment_ci_split(oracle, w, current)) {
    current = *grown;
    rep.per_size.push_back({count(current), current, weight_of(w, current)});
    ++rep.augmentations;
  }
  rep.queries = counters_delta(before, oracle.counters());
  finalize_report(rep);
  return rep;
}

SolveReport solve_reference(const Matroid& m1, const Matroid& m2,
                            const WeightVec& w, bool weighted) {
  SolveReport rep;
  rep.n = m1.size();
  rep.oracle = OracleKind::kFullPair;
  rep.weighted = weighted;
  Mask current = 0;
  rep.per_size.push_back({0, 0, 0});
  for (;;) {
    AugmentStep step = weighted ? augment_max_weight(m1, m2, w, current)
                                : augment_max_cardinality(m1, m2, current);
    if (!step.next) {
      rep.certificate = step.certificate;
      break;
    }
    current = *step.next;
    rep.per_size.push_back({count(current), current, weight_of(w, current)});
    ++rep.augmentations;
  }
  finalize_report(rep);
  return rep;
}

}  // namespace mi
