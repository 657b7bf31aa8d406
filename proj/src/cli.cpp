// Copyright 2026 The dsep Authors
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

#include "dsep/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <random>

#include "CLI11.hpp"

#include "dsep/bench.hpp"
#include "dsep/error.hpp"
#include "dsep/generators.hpp"
#include "dsep/graph_io.hpp"
#include "dsep/oracle.hpp"
#include "dsep/requisite.hpp"
#include "dsep/separation.hpp"
#include "dsep/verify.hpp"

namespace dsep {
namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct GraphArgs {
  std::string path;
  bool json = false;
  std::string j;
  std::string l;
  std::string k;
};

NodeSet resolve(const Dag& dag, const std::string& list, const char* flag) {
  std::vector<NodeId> ids;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t stop = std::min(list.find(',', start), list.size());
    std::string name = list.substr(start, stop - start);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    start = stop + 1;
    if (name.empty()) continue;
    auto id = dag.find(name);
    if (!id) throw Error(ErrorCode::kInvalidArgument, std::string(flag) + ": unknown node '" + name + "'");
    ids.push_back(*id);
  }
  return NodeSet(std::move(ids));
}

std::string join_names(const Dag& dag, const NodeSet& s, const char* suffix = "") {
  std::string out;
  for (NodeId v : s) {
    if (!out.empty()) out += ' ';
    out += dag.name(v) + suffix;
  }
  return out;
}

void add_graph_options(CLI::App* cmd, GraphArgs& args, bool with_k) {
  cmd->add_option("graph", args.path, "Graph file (edge list, or JSON with --json)")->required();
  cmd->add_flag("--json", args.json, "Read the graph file as JSON");
  cmd->add_option("--j", args.j, "Comma-separated query nodes J")->required();
  cmd->add_option("--l", args.l, "Comma-separated conditioning nodes L");
  if (with_k) cmd->add_option("--k", args.k, "Comma-separated target nodes K")->required();
}

void add_engine_options(CLI::App* cmd, bool& faithful) {
  auto* fast_flag = cmd->add_flag("--fast", "Class-expansion engine (default)");
  auto* faithful_flag = cmd->add_flag("--faithful", faithful, "Link-level forbidden-pair engine");
  fast_flag->excludes(faithful_flag);
}

int run_verify(const std::string& path, bool json, const std::vector<std::uint64_t>& random,
               std::size_t graphs, bool numeric, int trials, std::uint64_t seed, double tol,
               std::ostream& out) {
  std::vector<Dag> corpus;
  if (!random.empty()) {
    std::mt19937_64 rng(random[1]);
    for (std::size_t i = 0; i < graphs; ++i) corpus.push_back(random_small_dag(random[0], rng));
  } else {
    corpus.push_back(load_graph(path, json));
  }

  AgreementReport agreement;
  NumericReport numeric_report;
  std::size_t numeric_skipped = 0;
  AgreementOptions agreement_options;
  agreement_options.seed = seed;
  for (const Dag& dag : corpus) {
    agreement += check_agreement(dag, agreement_options);
    if (!numeric) continue;
    try {
      NumericOptions numeric_options;
      numeric_options.trials = trials;
      numeric_options.seed = seed;
      numeric_options.soundness_tol = tol;
      numeric_report += check_numeric(dag, numeric_options);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kOracleScaleExceeded) throw;
      ++numeric_skipped;
    }
  }

  out << agreement.summary();
  bool ok = agreement.total_disagreements() == 0;
  if (numeric) {
    out << numeric_report.summary();
    out << "numeric skipped: " << numeric_skipped << "\n";
    ok = ok && numeric_report.soundness_violations == 0 && numeric_report.persistent_misses == 0;
  }
  out << "result: " << (ok ? "AGREE" : "DISAGREE") << "\n";
  return ok ? kExitOk : kExitFails;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"d-separation queries on directed acyclic graphs", "dsep"};
  app.require_subcommand(1);

  GraphArgs dsep_args;
  bool dsep_faithful = false;
  auto* dsep_cmd = app.add_subcommand("dsep", "Print every node d-separated from J given L");
  add_graph_options(dsep_cmd, dsep_args, false);
  add_engine_options(dsep_cmd, dsep_faithful);

  GraphArgs check_args;
  bool check_faithful = false;
  auto* check_cmd = app.add_subcommand("check", "Test whether L d-separates J from K (exit 0 holds, 1 fails)");
  add_graph_options(check_cmd, check_args, true);
  add_engine_options(check_cmd, check_faithful);

  GraphArgs req_args;
  auto* req_cmd = app.add_subcommand("requisite", "Parameters and variables relevant to P(x_J | x_L)");
  add_graph_options(req_cmd, req_args, false);

  std::string verify_path;
  bool verify_json = false;
  std::vector<std::uint64_t> verify_random;
  std::size_t verify_graphs = 100;
  bool verify_numeric = false;
  int verify_trials = 5;
  std::uint64_t verify_seed = kDefaultSeed;
  double verify_tol = 1e-9;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all engines against the oracles");
  auto* verify_graph_opt = verify_cmd->add_option("graph", verify_path, "Graph file");
  verify_cmd->add_flag("--json", verify_json, "Read the graph file as JSON");
  auto* random_opt = verify_cmd->add_option("--random", verify_random, "Random corpus: MAX_NODES SEED")
                         ->expected(2);
  verify_cmd->add_option("--graphs", verify_graphs, "Graphs in the random corpus")->capture_default_str();
  verify_cmd->add_flag("--numeric", verify_numeric, "Also test conditional independence numerically");
  verify_cmd->add_option("--trials", verify_trials, "Random networks per graph")->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "Seed for sampling")->capture_default_str();
  verify_cmd->add_option("--tol", verify_tol, "Soundness tolerance")->capture_default_str();
  verify_graph_opt->excludes(random_opt);

  std::string bench_family = "chain";
  std::vector<std::size_t> bench_sizes{10000, 100000, 1000000};
  BenchOptions bench_options;
  bool bench_no_faithful = false;
  bool bench_no_moral = false;
  auto* bench_cmd = app.add_subcommand("bench", "Time the engines on generated graph families");
  bench_cmd->add_option("--family", bench_family, "chain, star or random")
      ->check(CLI::IsMember({"chain", "star", "random"}))
      ->capture_default_str();
  bench_cmd->add_option("--sizes", bench_sizes, "Ascending edge counts")->delimiter(',');
  bench_cmd->add_option("--seed", bench_options.seed, "Generator seed")->capture_default_str();
  bench_cmd->add_option("--repeats", bench_options.repeats, "Timing repeats (best is kept)")
      ->capture_default_str();
  bench_cmd->add_flag("--no-faithful", bench_no_faithful, "Skip the link-level engine");
  bench_cmd->add_flag("--no-moral", bench_no_moral, "Skip the moral-graph check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (dsep_cmd->parsed()) {
      Dag dag = load_graph(dsep_args.path, dsep_args.json);
      SeparationQuery q{resolve(dag, dsep_args.j, "--j"), resolve(dag, dsep_args.l, "--l")};
      NodeSet k = dsep_faithful ? dsep_set(dag, q) : dsep_set_fast(dag, q);
      out << join_names(dag, k) << "\n";
      return kExitOk;
    }
    if (check_cmd->parsed()) {
      Dag dag = load_graph(check_args.path, check_args.json);
      IndependenceStatement s{resolve(dag, check_args.j, "--j"), resolve(dag, check_args.l, "--l"),
                              resolve(dag, check_args.k, "--k")};
      CheckOptions options;
      options.engine = check_faithful ? Engine::kFaithful : Engine::kFast;
      bool holds = is_dseparated(dag, s, options);
      out << (holds ? "HOLDS" : "FAILS") << "\n";
      return holds ? kExitOk : kExitFails;
    }
    if (req_cmd->parsed()) {
      Dag dag = load_graph(req_args.path, req_args.json);
      SeparationQuery q{resolve(dag, req_args.j, "--j"), resolve(dag, req_args.l, "--l")};
      std::string parameters = join_names(dag, requisite_parameters(dag, q), "'");
      std::string variables = join_names(dag, relevant_variables(dag, q));
      out << "parameters:" << (parameters.empty() ? "" : " ") << parameters << "\n";
      out << "variables:" << (variables.empty() ? "" : " ") << variables << "\n";
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      if (verify_path.empty() && verify_random.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "verify needs a graph file or --random MAX_NODES SEED");
      }
      return run_verify(verify_path, verify_json, verify_random, verify_graphs, verify_numeric,
                        verify_trials, verify_seed, verify_tol, out);
    }
    if (bench_cmd->parsed()) {
      bench_options.family = parse_bench_family(bench_family);
      bench_options.sizes = bench_sizes;
      bench_options.include_faithful = !bench_no_faithful;
      bench_options.include_moral = !bench_no_moral;
      out << format_bench(run_bench(bench_options));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dsep
