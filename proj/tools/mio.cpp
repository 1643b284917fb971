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
//
// Command-line surface for the matroid-intersection toolkit: instance
// generation, restricted-oracle solving, brute-force verification, and the
// oracle-separation witness search.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mi/errors.hpp"
#include "mi/instance.hpp"
#include "mi/solvers.hpp"
#include "mi/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mi::SchemaError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mi::SchemaError("cannot open output file: " + path);
  out << text;
}

struct SolveOptions {
  std::string input;
  std::string oracle = "sum";
  bool weighted = false;
  bool as_json = false;
};

// Checks the structural declaration in the instance file against the
// requested solver; restricted oracles cannot verify it themselves.
void require_structure(const mi::Instance& instance,
                       const std::string& oracle) {
  if (oracle == "ci-partition" && !mi::is_unit_partition(instance.m1)) {
    throw mi::CapabilityError(
        "the ci-partition solver needs m1 declared as a partition matroid "
        "with unit capacities");
  }
  if (oracle == "ci-split" && !mi::is_split_record(instance.m1)) {
    throw mi::CapabilityError(
        "the ci-split solver needs m1 declared as an elementary split "
        "matroid");
  }
}

mi::SolveReport run_solver(const mi::Instance& instance,
                           const std::string& oracle, bool weighted) {
  require_structure(instance, oracle);
  mi::Matroid m1 = mi::build_matroid(instance.m1);
  mi::Matroid m2 = mi::build_matroid(instance.m2);
  mi::WeightVec weights = weighted
                              ? instance.weights
                              : mi::WeightVec(instance.weights.size(), 0);
  mi::SolveReport report;
  if (oracle == "sum") {
    mi::RestrictedOracle o(mi::OracleKind::kSum, m1, m2);
    report = mi::solve_rank_sum(o, weights);
  } else if (oracle == "ci-max") {
    mi::RestrictedOracle o(mi::OracleKind::kCiMax, m1, m2);
    report = mi::solve_ci_max(o, weights);
  } else if (oracle == "ci-partition") {
    if (weighted) {
      throw mi::CapabilityError(
          "the ci-partition solver maximizes cardinality only; drop "
          "--weighted");
    }
    mi::RestrictedOracle o(mi::OracleKind::kCi, m1, m2);
    report = mi::solve_ci_partition(o, instance.weights);
  } else if (oracle == "ci-split") {
    mi::RestrictedOracle o(mi::OracleKind::kCi, m1, m2);
    report = mi::solve_ci_split(o, weights);
  } else if (oracle == "full") {
    report = mi::solve_reference(m1, m2, weights, weighted);
  } else {
    throw mi::CapabilityError("unknown oracle '" + oracle + "'");
  }
  // Reports always show true instance weights, even for unweighted runs.
  report.weighted = weighted;
  for (mi::SizeEntry& entry : report.per_size) {
    entry.weight = mi::weight_of(instance.weights, entry.set);
  }
  if (!weighted) {
    report.best_size = report.max_cardinality;
    report.best_set = report.max_cardinality_set;
  }
  report.best_weight = mi::weight_of(instance.weights, report.best_set);
  return report;
}

struct VerifyOutcome {
  bool ok = true;
  std::string detail;
};

VerifyOutcome verify_instance(const mi::Instance& instance,
                              const std::string& oracle, bool weighted) {
  mi::Matroid m1 = mi::build_matroid(instance.m1);
  mi::Matroid m2 = mi::build_matroid(instance.m2);
  mi::SolveReport report = run_solver(instance, oracle, weighted);
  mi::BruteForceResult truth = mi::brute_force(m1, m2, instance.weights);

  auto fail = [&](const std::string& why) {
    return VerifyOutcome{false, why};
  };
  if (report.max_cardinality != truth.max_cardinality) {
    return fail("max cardinality " + std::to_string(report.max_cardinality) +
                " != " + std::to_string(truth.max_cardinality));
  }
  for (const mi::SizeEntry& entry : report.per_size) {
    if (!m1.independent(entry.set) || !m2.independent(entry.set)) {
      return fail("reported set at size " + std::to_string(entry.size) +
                  " is not common independent");
    }
    if (mi::count(entry.set) != entry.size) {
      return fail("reported set size mismatch");
    }
  }
  if (weighted) {
    if (report.best_weight != truth.best_weight) {
      return fail("optimum weight " + std::to_string(report.best_weight) +
                  " != " + std::to_string(truth.best_weight));
    }
    for (int k = 0; k <= truth.max_cardinality; ++k) {
      if (report.per_size[static_cast<std::size_t>(k)].weight !=
          truth.best_weight_by_size[static_cast<std::size_t>(k)]) {
        return fail("per-size optimum differs at size " + std::to_string(k));
      }
    }
  }
  // Certified optimality: the reference run ends with a set Z whose rank
  // split equals the maximum cardinality, which also equals the brute
  // duality minimum.
  mi::SolveReport reference = mi::solve_reference(m1, m2, instance.weights,
                                                  false);
  if (!reference.certificate) return fail("reference run lost certificate");
  mi::Mask z = *reference.certificate;
  long long certified =
      m1.rank(z) + m2.rank(mi::full_mask(instance.n) & ~z);
  if (certified != truth.max_cardinality ||
      truth.duality_value != truth.max_cardinality) {
    return fail("duality certificate mismatch");
  }
  return VerifyOutcome{};
}

int do_witness(const std::string& target, const std::string& out) {
  struct Config {
    const char* name;
    mi::OracleKind target;
    std::vector<mi::OracleKind> agreeing;
    bool truncated;
  };
  const std::vector<Config> configs = {
      {"min",
       mi::OracleKind::kMin,
       {mi::OracleKind::kSum, mi::OracleKind::kCi},
       false},
      {"sum",
       mi::OracleKind::kSum,
       {mi::OracleKind::kCi, mi::OracleKind::kMax},
       true},
      {"max", mi::OracleKind::kMax, {mi::OracleKind::kSum}, false},
  };
  bool all_found = true;
  bool matched = false;
  for (const Config& config : configs) {
    if (target != "all" && target != config.name) continue;
    matched = true;
    auto witness = mi::find_separation_witness(config.target, config.agreeing,
                                               config.truncated);
    if (!witness || !mi::reverify_witness(*witness)) {
      std::cout << config.name << ": no witness found\n";
      all_found = false;
      continue;
    }
    std::cout << config.name << ": agreeing oracles {";
    for (std::size_t i = 0; i < config.agreeing.size(); ++i) {
      std::cout << (i ? ", " : "") << mi::to_string(config.agreeing[i]);
    }
    std::cout << "} cannot separate, yet " << config.name << "("
              << mi::to_string(witness->differing_subset)
              << ") = " << witness->value_a << " vs " << witness->value_b
              << (config.truncated ? " (3-truncated graphic pairs)"
                                   : " (graphic pairs)")
              << "\n";
    if (!out.empty()) {
      write_file(out + config.name + ".json", mi::emit_witness(*witness));
      std::cout << "  wrote " << out << config.name << ".json\n";
    }
  }
  if (!matched) {
    throw mi::CapabilityError("unknown witness target '" + target + "'");
  }
  return all_found ? kOk : kMismatch;
}

int do_stats(const mi::Instance& instance, bool weighted) {
  std::vector<std::string> oracles = {"sum", "ci-max"};
  if (!weighted && mi::is_unit_partition(instance.m1)) {
    oracles.push_back("ci-partition");
  }
  if (mi::is_split_record(instance.m1)) oracles.push_back("ci-split");
  oracles.push_back("full");
  std::printf("%-14s %8s %8s %8s %8s %8s %6s\n", "oracle", "sum", "min",
              "max", "ci", "adapter", "augs");
  for (const std::string& oracle : oracles) {
    mi::SolveReport report = run_solver(instance, oracle, weighted);
    std::printf("%-14s %8lld %8lld %8lld %8lld %8lld %6lld\n", oracle.c_str(),
                report.queries.sum, report.queries.min, report.queries.max,
                report.queries.ci, report.queries.adapter,
                report.augmentations);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid intersection under restricted oracles"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  mi::GeneratorConfig gen_config;
  std::string gen_out;
  gen->add_option("--seed", gen_config.seed, "random seed");
  gen->add_option("--n", gen_config.n, "ground-set size")
      ->check(CLI::Range(1, 64));
  gen->add_option("--profile", gen_config.profile,
                  "mixed|partition|split|matching");
  gen->add_option("--weight-min", gen_config.weight_min, "weight range low");
  gen->add_option("--weight-max", gen_config.weight_max, "weight range high");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "solve one instance");
  SolveOptions solve_options;
  solve->add_option("--in", solve_options.input, "instance file")->required();
  solve->add_option("--oracle", solve_options.oracle,
                    "sum|ci-partition|ci-split|ci-max|full");
  solve->add_flag("--weighted", solve_options.weighted,
                  "maximize weight instead of cardinality");
  solve->add_flag("--json", solve_options.as_json, "machine-readable output");

  auto* verify = app.add_subcommand(
      "verify", "check solver output against brute force");
  std::vector<std::string> verify_inputs;
  std::string verify_oracle = "sum";
  bool verify_weighted = false;
  int verify_count = 0;
  std::uint64_t verify_seed = 1;
  int verify_min_n = 4;
  int verify_max_n = 10;
  std::string verify_profile = "mixed";
  verify->add_option("--in", verify_inputs, "instance files");
  verify->add_option("--oracle", verify_oracle,
                     "sum|ci-partition|ci-split|ci-max|full");
  verify->add_flag("--weighted", verify_weighted, "verify weighted optima");
  verify->add_option("--count", verify_count,
                     "additionally verify this many generated instances");
  verify->add_option("--seed", verify_seed, "first seed for generation");
  verify->add_option("--min-n", verify_min_n, "smallest generated size")
      ->check(CLI::Range(1, 64));
  verify->add_option("--max-n", verify_max_n, "largest generated size")
      ->check(CLI::Range(1, 64));
  verify->add_option("--profile", verify_profile, "generator profile");

  auto* witness = app.add_subcommand(
      "witness", "search for oracle-separation witnesses");
  std::string witness_target = "all";
  std::string witness_out;
  witness->add_option("--target", witness_target, "min|sum|max|all");
  witness->add_option("--out", witness_out,
                      "fixture file prefix (writes <prefix><target>.json)");

  auto* stats = app.add_subcommand("stats", "query-count table per oracle");
  std::string stats_input;
  bool stats_weighted = false;
  stats->add_option("--in", stats_input, "instance file")->required();
  stats->add_flag("--weighted", stats_weighted, "run weighted solves");

  try {
    app.parse(argc, argv);

    if (*gen) {
      std::string text = mi::emit_instance(mi::generate_instance(gen_config));
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        write_file(gen_out, text);
      }
      return kOk;
    }

    if (*solve) {
      mi::Instance instance =
          mi::parse_instance(read_file(solve_options.input));
      mi::SolveReport report =
          run_solver(instance, solve_options.oracle, solve_options.weighted);
      std::cout << (solve_options.as_json ? mi::report_to_json(report)
                                          : mi::format_report(report));
      return kOk;
    }

    if (*verify) {
      if (verify_min_n > verify_max_n) {
        throw mi::SchemaError("--min-n must not exceed --max-n");
      }
      int failures = 0;
      int total = 0;
      auto check_one = [&](const std::string& name,
                           const mi::Instance& instance) {
        VerifyOutcome outcome =
            verify_instance(instance, verify_oracle, verify_weighted);
        ++total;
        if (outcome.ok) {
          std::cout << "ok " << name << "\n";
        } else {
          ++failures;
          std::cout << "MISMATCH " << name << ": " << outcome.detail << "\n";
        }
      };
      for (const std::string& path : verify_inputs) {
        check_one(path, mi::parse_instance(read_file(path)));
      }
      for (int i = 0; i < verify_count; ++i) {
        mi::GeneratorConfig config;
        config.seed = verify_seed + static_cast<std::uint64_t>(i);
        config.n = verify_min_n +
                   static_cast<int>(config.seed %
                                    static_cast<std::uint64_t>(
                                        verify_max_n - verify_min_n + 1));
        config.profile = verify_profile;
        check_one("seed-" + std::to_string(config.seed),
                  mi::generate_instance(config));
      }
      std::cout << (total - failures) << "/" << total << " verified\n";
      return failures == 0 ? kOk : kMismatch;
    }

    if (*witness) {
      return do_witness(witness_target, witness_out);
    }

    if (*stats) {
      mi::Instance instance = mi::parse_instance(read_file(stats_input));
      return do_stats(instance, stats_weighted);
    }
  } catch (const CLI::ParseError& error) {
    if (error.get_exit_code() == 0) return app.exit(error);  // --help
    app.exit(error);
    return kUsage;
  } catch (const mi::SchemaError& error) {
    std::cerr << "schema error: " << error.what() << "\n";
    return kUsage;
  } catch (const mi::RepresentationError& error) {
    std::cerr << "invalid instance: " << error.what() << "\n";
    return kUsage;
  } catch (const mi::CapabilityError& error) {
    std::cerr << "usage error: " << error.what() << "\n";
    return kUsage;
  } catch (const mi::BudgetError& error) {
    std::cerr << "budget error: " << error.what() << "\n";
    return kUsage;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kUsage;
  }
  return kOk;
}
