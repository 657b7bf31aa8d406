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

#include "dsep/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <sstream>

#include "dsep/error.hpp"
#include "dsep/generators.hpp"
#include "dsep/moral.hpp"
#include "dsep/separation.hpp"

namespace dsep {
namespace {

struct Instance {
  Dag dag;
  SeparationQuery query;
  NodeSet target;
};

Instance make_instance(BenchFamily family, std::size_t edges, std::uint64_t seed) {
  Instance inst;
  switch (family) {
    case BenchFamily::kChain:
      inst.dag = chain_dag(edges + 1);
      inst.query.j = NodeSet{NodeId(0)};
      break;
    case BenchFamily::kStar:
      inst.dag = star_dag(edges + 1);
      inst.query.j = NodeSet{NodeId(1)};
      break;
    case BenchFamily::kRandomSparse: {
      std::size_t n = std::max<std::size_t>(3, (edges + 3) / 2);
      inst.dag = random_sparse_dag(n, 2, seed ^ edges);
      inst.query.j = NodeSet{NodeId(0)};
      std::vector<NodeId> l;
      for (std::uint32_t v = 25; v < n; v += 50) l.push_back(NodeId(v));
      inst.query.l = NodeSet(std::move(l));
      break;
    }
  }
  for (std::size_t v = inst.dag.node_count(); v-- > 0;) {
    NodeId id(static_cast<std::uint32_t>(v));
    if (!inst.query.j.contains(id) && !inst.query.l.contains(id)) {
      inst.target = NodeSet{id};
      break;
    }
  }
  return inst;
}

template <typename F>
double best_time_ms(int repeats, F&& run) {
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(1, repeats); ++r) {
    auto start = std::chrono::steady_clock::now();
    run();
    auto stop = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

}  // namespace

BenchFamily parse_bench_family(std::string_view name) {
  if (name == "chain") return BenchFamily::kChain;
  if (name == "star") return BenchFamily::kStar;
  if (name == "random") return BenchFamily::kRandomSparse;
  throw Error(ErrorCode::kInvalidArgument, "unknown family '" + std::string(name) + "'");
}

std::string_view to_string(BenchFamily family) {
  switch (family) {
    case BenchFamily::kChain: return "chain";
    case BenchFamily::kStar: return "star";
    case BenchFamily::kRandomSparse: return "random";
  }
  return "?";
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  if (!std::is_sorted(options.sizes.begin(), options.sizes.end())) {
    throw Error(ErrorCode::kInvalidArgument, "sizes must be ascending");
  }
  std::vector<BenchRow> rows;
  for (std::size_t size : options.sizes) {
    if (size == 0) throw Error(ErrorCode::kInvalidArgument, "sizes must be positive");
    Instance inst = make_instance(options.family, size, options.seed);
    BenchRow base;
    base.family = std::string(to_string(options.family));
    base.nodes = inst.dag.node_count();
    base.edges = inst.dag.edge_count();

    BenchRow fast = base;
    fast.algorithm = "fast";
    SweepStats stats;
    NodeSet result;
    fast.time_ms = best_time_ms(options.repeats, [&] { result = dsep_set_fast(inst.dag, inst.query, &stats); });
    fast.result_size = result.size();
    fast.operations = stats.links_scanned;
    rows.push_back(fast);

    if (options.include_faithful) {
      BenchRow faithful = base;
      faithful.algorithm = "faithful";
      std::uint64_t labeled = 0;
      faithful.time_ms = best_time_ms(options.repeats, [&] {
        DescendantTable table = descendant_table(inst.dag, inst.query.l);
        DoubledGraph doubled(inst.dag);
        ReachabilityResult r = find_reachable(doubled.graph(), inst.query.j, DsepLegality(doubled, table));
        labeled = r.links_labeled;
      });
      faithful.result_size = dsep_set(inst.dag, inst.query).size();
      faithful.operations = labeled;
      rows.push_back(faithful);
    }

    if (options.include_moral && !inst.target.empty()) {
      BenchRow moral = base;
      moral.algorithm = "moral";
      IndependenceStatement s{inst.query.j, inst.query.l, inst.target};
      bool holds = false;
      moral.time_ms = best_time_ms(options.repeats, [&] { holds = moral_check(inst.dag, s); });
      moral.result_size = holds ? 1 : 0;
      moral.operations = moralize(inst.dag, s).edges.size();
      rows.push_back(moral);
    }
  }
  return rows;
}

std::string format_bench(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "family\tnodes\tedges\talgorithm\ttime_ms\tresult\toperations\n";
  char time[32];
  for (const BenchRow& r : rows) {
    std::snprintf(time, sizeof time, "%.3f", r.time_ms);
    out << r.family << '\t' << r.nodes << '\t' << r.edges << '\t' << r.algorithm << '\t' << time
        << '\t' << r.result_size << '\t' << r.operations << '\n';
  }
  return out.str();
}

}  // namespace dsep
