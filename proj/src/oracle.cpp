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

#include "dsep/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace dsep {
namespace {

void guard_trail_scale(const Dag& dag) {
  if (dag.node_count() > kMaxTrailOracleNodes) {
    throw Error(ErrorCode::kOracleScaleExceeded,
                "trail enumeration limited to " + std::to_string(kMaxTrailOracleNodes) + " nodes");
  }
}

struct Step {
  NodeId to;
  TrailLink link;
};

std::vector<std::vector<Step>> skeleton(const Dag& dag) {
  std::vector<std::vector<Step>> adj(dag.node_count());
  for (EdgeId id = 0; id < dag.edge_count(); ++id) {
    const Edge& e = dag.edge(id);
    adj[e.tail.index()].push_back({e.head, {id, true}});
    adj[e.head.index()].push_back({e.tail, {id, false}});
  }
  return adj;
}

class TrailWalker {
 public:
  TrailWalker(const Dag& dag, NodeId target, bool simple)
      : adj_(skeleton(dag)),
        target_(target),
        simple_(simple),
        node_used_(dag.node_count(), 0),
        edge_used_(dag.edge_count(), 0) {}

  std::vector<Trail> run(NodeId source) {
    current_.nodes.push_back(source);
    node_used_[source.index()] = 1;
    extend(source);
    return std::move(found_);
  }

 private:
  void extend(NodeId at) {
    for (const Step& step : adj_[at.index()]) {
      if (edge_used_[step.link.edge]) continue;
      if (simple_ && node_used_[step.to.index()]) continue;
      edge_used_[step.link.edge] = 1;
      ++node_used_[step.to.index()];
      current_.nodes.push_back(step.to);
      current_.links.push_back(step.link);
      if (step.to == target_) found_.push_back(current_);
      if (!simple_ || step.to != target_) extend(step.to);
      current_.nodes.pop_back();
      current_.links.pop_back();
      --node_used_[step.to.index()];
      edge_used_[step.link.edge] = 0;
    }
  }

  std::vector<std::vector<Step>> adj_;
  NodeId target_;
  bool simple_;
  std::vector<int> node_used_;
  std::vector<char> edge_used_;
  Trail current_;
  std::vector<Trail> found_;
};

std::vector<Trail> enumerate(const Dag& dag, NodeId a, NodeId b, bool simple) {
  guard_trail_scale(dag);
  if (!dag.contains(a) || !dag.contains(b)) {
    throw Error(ErrorCode::kForeignNode, "trail endpoint not in graph");
  }
  if (a == b) throw Error(ErrorCode::kInvalidArgument, "trail endpoints must differ");
  return TrailWalker(dag, b, simple).run(a);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 1));
}

std::size_t parent_configs(const DiscreteNetwork& net, NodeId v) {
  std::size_t configs = 1;
  for (EdgeId id : net.dag.in_edges(v)) configs *= net.arity[net.dag.edge(id).tail.index()];
  return configs;
}

void guard_joint_scale(const std::vector<std::uint32_t>& arity) {
  std::size_t entries = 1;
  for (std::uint32_t a : arity) {
    if (a == 0 || entries > kMaxJointEntries / a) {
      throw Error(ErrorCode::kOracleScaleExceeded,
                  "joint table limited to " + std::to_string(kMaxJointEntries) + " entries");
    }
    entries *= a;
  }
}

}  // namespace

std::vector<Trail> enumerate_simple_trails(const Dag& dag, NodeId a, NodeId b) {
  return enumerate(dag, a, b, true);
}

std::vector<Trail> enumerate_trails(const Dag& dag, NodeId a, NodeId b) {
  return enumerate(dag, a, b, false);
}

NodeSet dsep_bruteforce(const Dag& dag, const SeparationQuery& q, TrailFamily family) {
  validate(dag, q);
  guard_trail_scale(dag);
  DescendantTable table = descendant_table(dag, q.l);
  NodeSet separated;
  for (std::size_t i = 0; i < dag.node_count(); ++i) {
    NodeId alpha(static_cast<std::uint32_t>(i));
    if (q.j.contains(alpha) || q.l.contains(alpha)) continue;
    bool connected = false;
    for (NodeId j : q.j) {
      auto trails = family == TrailFamily::kSimple ? enumerate_simple_trails(dag, j, alpha)
                                                   : enumerate_trails(dag, j, alpha);
      connected = std::any_of(trails.begin(), trails.end(), [&](const Trail& t) {
        return is_active_trail(dag, t, table);
      });
      if (connected) break;
    }
    if (!connected) separated.insert(alpha);
  }
  return separated;
}

void validate(const DiscreteNetwork& net) {
  const std::size_t n = net.dag.node_count();
  if (net.arity.size() != n || net.cpts.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "network tables do not match node count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    NodeId v(static_cast<std::uint32_t>(i));
    if (net.arity[i] == 0) throw Error(ErrorCode::kInvalidArgument, "arity must be positive");
    std::size_t configs = parent_configs(net, v);
    const auto& cpt = net.cpts[i];
    if (cpt.size() != configs * net.arity[i]) {
      throw Error(ErrorCode::kInvalidArgument, "table of " + net.dag.name(v) + " has wrong shape");
    }
    for (std::size_t c = 0; c < configs; ++c) {
      double sum = 0.0;
      for (std::size_t x = 0; x < net.arity[i]; ++x) {
        double p = cpt[c * net.arity[i] + x];
        if (!(p >= 0.0 && p <= 1.0)) {
          throw Error(ErrorCode::kInvalidArgument, "probability outside [0, 1] at " + net.dag.name(v));
        }
        sum += p;
      }
      if (std::abs(sum - 1.0) > 1e-12) {
        throw Error(ErrorCode::kInvalidArgument, "column of " + net.dag.name(v) + " does not sum to 1");
      }
    }
  }
}

DiscreteNetwork random_network(const Dag& dag, std::uint32_t arity, std::uint64_t seed) {
  if (arity < 2) throw Error(ErrorCode::kInvalidArgument, "arity must be at least 2");
  DiscreteNetwork net{dag, std::vector<std::uint32_t>(dag.node_count(), arity), {}};
  guard_joint_scale(net.arity);

  // Dirichlet(1/2) columns lifted away from zero: skewed enough that
  // dependence is easy to see, positive so every conditioning event has mass.
  std::mt19937_64 rng(seed);
  std::gamma_distribution<double> gamma(0.5, 1.0);
  net.cpts.resize(dag.node_count());
  for (std::size_t i = 0; i < dag.node_count(); ++i) {
    std::size_t configs = parent_configs(net, NodeId(static_cast<std::uint32_t>(i)));
    auto& cpt = net.cpts[i];
    cpt.resize(configs * arity);
    for (std::size_t c = 0; c < configs; ++c) {
      double sum = 0.0;
      for (std::size_t x = 0; x < arity; ++x) {
        double w = gamma(rng) + 1e-3;
        cpt[c * arity + x] = w;
        sum += w;
      }
      for (std::size_t x = 0; x < arity; ++x) cpt[c * arity + x] /= sum;
    }
  }
  return net;
}

JointTable::JointTable(std::vector<std::uint32_t> arity, std::vector<double> probabilities)
    : arity_(std::move(arity)), strides_(arity_.size()), probabilities_(std::move(probabilities)) {
  std::size_t stride = 1;
  for (std::size_t v = 0; v < arity_.size(); ++v) {
    strides_[v] = stride;
    stride *= arity_[v];
  }
  if (stride != probabilities_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "joint table size does not match arities");
  }
}

double JointTable::mass() const {
  return std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
}

JointTable joint(const DiscreteNetwork& net) {
  validate(net);
  guard_joint_scale(net.arity);
  const std::size_t n = net.dag.node_count();
  std::size_t entries = 1;
  for (std::uint32_t a : net.arity) entries *= a;

  std::vector<double> probs(entries, 1.0);
  std::vector<std::uint32_t> value(n, 0);
  for (std::size_t idx = 0; idx < entries; ++idx) {
    double p = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t config = 0;
      std::size_t radix = 1;
      for (EdgeId id : net.dag.in_edges(NodeId(static_cast<std::uint32_t>(i)))) {
        std::size_t parent = net.dag.edge(id).tail.index();
        config += value[parent] * radix;
        radix *= net.arity[parent];
      }
      p *= net.cpts[i][config * net.arity[i] + value[i]];
    }
    probs[idx] = p;
    // Advance the mixed-radix counter, node 0 fastest.
    for (std::size_t i = 0; i < n; ++i) {
      if (++value[i] < net.arity[i]) break;
      value[i] = 0;
    }
  }
  return JointTable(net.arity, std::move(probs));
}

double ci_gap(const JointTable& table, const NodeSet& j, const NodeSet& k, const NodeSet& l) {
  const std::size_t n = table.arity().size();
  for (const NodeSet* s : {&j, &k, &l}) {
    if (s->bound() > n) throw Error(ErrorCode::kForeignNode, "variable not in joint table");
  }
  if (j.intersects(k) || j.intersects(l) || k.intersects(l)) {
    throw Error(ErrorCode::kOverlappingSets, "J, K and L must be disjoint");
  }
  auto domain = [&](const NodeSet& s) {
    std::size_t size = 1;
    for (NodeId v : s) size *= table.arity()[v.index()];
    return size;
  };
  auto encode = [&](const NodeSet& s, std::size_t entry) {
    std::size_t code = 0;
    std::size_t radix = 1;
    for (NodeId v : s) {
      code += table.value_of(entry, v) * radix;
      radix *= table.arity()[v.index()];
    }
    return code;
  };
  const std::size_t nj = domain(j);
  const std::size_t nk = domain(k);
  const std::size_t nl = domain(l);

  // marginal[(l * nj + j) * nk + k]
  std::vector<double> marginal(nj * nk * nl, 0.0);
  for (std::size_t e = 0; e < table.size(); ++e) {
    marginal[(encode(l, e) * nj + encode(j, e)) * nk + encode(k, e)] += table[e];
  }
  double gap = 0.0;
  std::vector<double> pj(nj);
  std::vector<double> pk(nk);
  for (std::size_t xl = 0; xl < nl; ++xl) {
    const double* block = marginal.data() + xl * nj * nk;
    double pl = 0.0;
    std::fill(pj.begin(), pj.end(), 0.0);
    std::fill(pk.begin(), pk.end(), 0.0);
    for (std::size_t xj = 0; xj < nj; ++xj) {
      for (std::size_t xk = 0; xk < nk; ++xk) {
        double p = block[xj * nk + xk];
        pj[xj] += p;
        pk[xk] += p;
        pl += p;
      }
    }
    if (!(pl > 0.0)) continue;
    for (std::size_t xj = 0; xj < nj; ++xj) {
      for (std::size_t xk = 0; xk < nk; ++xk) {
        double lhs = block[xj * nk + xk] / pl;
        double rhs = (pj[xj] / pl) * (pk[xk] / pl);
        gap = std::max(gap, std::abs(lhs - rhs));
      }
    }
  }
  return gap;
}

bool ci_holds(const JointTable& table, const NodeSet& j, const NodeSet& k, const NodeSet& l,
              double tol) {
  return ci_gap(table, j, k, l) <= tol;
}

NumericReport& NumericReport::operator+=(const NumericReport& other) {
  separated_triples += other.separated_triples;
  soundness_confirmations += other.soundness_confirmations;
  soundness_violations += other.soundness_violations;
  connected_triples += other.connected_triples;
  dependence_found += other.dependence_found;
  retried += other.retried;
  persistent_misses += other.persistent_misses;
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
  return *this;
}

std::string NumericReport::summary() const {
  std::ostringstream out;
  out << "separated triples: " << separated_triples << "\n"
      << "soundness confirmations: " << soundness_confirmations << "\n"
      << "soundness violations: " << soundness_violations << "\n"
      << "connected triples: " << connected_triples << "\n"
      << "dependence found: " << dependence_found << "\n"
      << "retried: " << retried << "\n"
      << "persistent misses: " << persistent_misses << "\n";
  for (const std::string& w : witnesses) out << "witness: " << w << "\n";
  return out.str();
}

NumericReport check_numeric(const Dag& dag, const NumericOptions& options) {
  if (options.trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be positive");
  const std::size_t n = dag.node_count();
  if (options.arity < 2) throw Error(ErrorCode::kInvalidArgument, "arity must be at least 2");
  guard_joint_scale(std::vector<std::uint32_t>(n, options.arity));

  struct Triple {
    NodeId j;
    NodeId k;
    NodeSet l;
  };
  auto make_triple = [&](std::uint32_t a, std::uint32_t b, std::uint64_t bits) {
    Triple t{NodeId(a), NodeId(b), {}};
    std::size_t i = 0;
    for (std::uint32_t c = 0; c < n; ++c) {
      if (c == a || c == b) continue;
      if (bits >> i++ & 1U) t.l.insert(NodeId(c));
    }
    return t;
  };
  std::vector<Triple> triples;
  if (n >= 2) {
    const std::uint64_t subsets = std::uint64_t{1} << (n - 2);
    const std::uint64_t total = n * (n - 1) / 2 * subsets;
    if (total <= options.max_triples) {
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = a + 1; b < n; ++b) {
          for (std::uint64_t bits = 0; bits < subsets; ++bits) triples.push_back(make_triple(a, b, bits));
        }
      }
    } else {
      std::mt19937_64 rng(derive_seed(options.seed, 0xfeed));
      std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
      while (triples.size() < options.max_triples) {
        std::uint32_t a = pick(rng);
        std::uint32_t b = pick(rng);
        if (a == b) continue;
        triples.push_back(make_triple(std::min(a, b), std::max(a, b), rng() & (subsets - 1)));
      }
    }
  }

  auto make_batch = [&](std::uint64_t offset) {
    std::vector<JointTable> batch;
    for (int t = 0; t < options.trials; ++t) {
      batch.push_back(joint(random_network(dag, options.arity, derive_seed(options.seed, offset + t))));
    }
    return batch;
  };
  std::vector<JointTable> networks = make_batch(0);
  std::vector<JointTable> retry;

  auto describe = [&](const Triple& t) {
    std::string s = "I(" + dag.name(t.j) + ", {";
    bool first = true;
    for (NodeId v : t.l) {
      s += (first ? "" : ",") + dag.name(v);
      first = false;
    }
    return s + "}, " + dag.name(t.k) + ")";
  };

  NumericReport report;
  for (const Triple& t : triples) {
    NodeSet j{t.j};
    NodeSet k{t.k};
    bool separated = is_dseparated(dag, IndependenceStatement{j, t.l, k});
    if (separated) {
      ++report.separated_triples;
      for (const JointTable& table : networks) {
        double gap = ci_gap(table, j, k, t.l);
        if (gap <= options.soundness_tol) {
          ++report.soundness_confirmations;
        } else {
          ++report.soundness_violations;
          report.witnesses.push_back("soundness " + describe(t) + " gap " + std::to_string(gap));
        }
      }
      continue;
    }
    ++report.connected_triples;
    auto dependent = [&](const std::vector<JointTable>& batch) {
      return std::any_of(batch.begin(), batch.end(), [&](const JointTable& table) {
        return ci_gap(table, j, k, t.l) > options.dependence_tol;
      });
    };
    if (dependent(networks)) {
      ++report.dependence_found;
      continue;
    }
    ++report.retried;
    if (retry.empty()) retry = make_batch(static_cast<std::uint64_t>(options.trials));
    if (!dependent(retry)) {
      ++report.persistent_misses;
      report.witnesses.push_back("completeness " + describe(t));
    }
  }
  return report;
}

}  // namespace dsep
