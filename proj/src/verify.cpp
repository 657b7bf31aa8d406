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

#include "dsep/verify.hpp"

#include <random>
#include <sstream>

#include "dsep/moral.hpp"
#include "dsep/oracle.hpp"
#include "dsep/separation.hpp"

namespace dsep {
namespace {

constexpr std::size_t kMaxWitnesses = 20;

std::string format_set(const Dag& dag, const NodeSet& s) {
  std::string out = "{";
  bool first = true;
  for (NodeId v : s) {
    out += (first ? "" : ",") + dag.name(v);
    first = false;
  }
  return out + "}";
}

class Checker {
 public:
  Checker(const Dag& dag, AgreementReport& report) : dag_(dag), report_(report) {}

  void query(const SeparationQuery& q) {
    ++report_.queries;
    NodeSet faithful = dsep_set(dag_, q);
    NodeSet fast = dsep_set_fast(dag_, q);
    if (faithful != fast) note(report_.set_disagreements, "fast", q, faithful, fast);
    if (dag_.node_count() <= kMaxTrailOracleNodes) {
      NodeSet oracle = dsep_bruteforce(dag_, q);
      if (faithful != oracle) note(report_.set_disagreements, "oracle", q, faithful, oracle);
    } else {
      ++report_.oracle_skipped;
    }

    NodeSet others = all_nodes().minus(q.j).minus(q.l);
    for (NodeId k : others) statement({q.j, q.l, NodeSet{k}}, faithful.contains(k));
    if (others.size() > 1) statement({q.j, q.l, others}, others.is_subset_of(faithful));
    if (faithful.size() > 1) statement({q.j, q.l, faithful}, true);
  }

 private:
  NodeSet all_nodes() const {
    return NodeSet::from_mask(std::vector<char>(dag_.node_count(), 1));
  }

  void statement(const IndependenceStatement& s, bool expected) {
    ++report_.statements;
    bool fast_early = is_dseparated(dag_, s, {Engine::kFast, true});
    bool fast_full = is_dseparated(dag_, s, {Engine::kFast, false});
    bool faithful_early = is_dseparated(dag_, s, {Engine::kFaithful, true});
    bool faithful_full = is_dseparated(dag_, s, {Engine::kFaithful, false});
    bool moral = moral_check(dag_, s, MarriageRule::kRestricted);
    bool moral_full = moral_check(dag_, s, MarriageRule::kFull);

    if (fast_early != fast_full || faithful_early != faithful_full) {
      note(report_.early_stop_disagreements, "early-stop", s);
    }
    if (fast_early != moral || fast_early != expected || faithful_full != expected) {
      note(report_.moral_disagreements, "moral", s);
    }
    if (moral != moral_full) note(report_.marriage_disagreements, "marriage", s);
  }

  void note(std::size_t& counter, const char* what, const SeparationQuery& q, const NodeSet& a,
            const NodeSet& b) {
    ++counter;
    if (report_.witnesses.size() < kMaxWitnesses) {
      report_.witnesses.push_back(std::string(what) + ": J=" + format_set(dag_, q.j) + " L=" +
                                  format_set(dag_, q.l) + " " + format_set(dag_, a) + " vs " +
                                  format_set(dag_, b));
    }
  }

  void note(std::size_t& counter, const char* what, const IndependenceStatement& s) {
    ++counter;
    if (report_.witnesses.size() < kMaxWitnesses) {
      report_.witnesses.push_back(std::string(what) + ": I(" + format_set(dag_, s.j) + ", " +
                                  format_set(dag_, s.l) + ", " + format_set(dag_, s.k) + ")");
    }
  }

  const Dag& dag_;
  AgreementReport& report_;
};

}  // namespace

AgreementReport& AgreementReport::operator+=(const AgreementReport& other) {
  graphs += other.graphs;
  queries += other.queries;
  statements += other.statements;
  oracle_skipped += other.oracle_skipped;
  set_disagreements += other.set_disagreements;
  moral_disagreements += other.moral_disagreements;
  early_stop_disagreements += other.early_stop_disagreements;
  marriage_disagreements += other.marriage_disagreements;
  for (const auto& w : other.witnesses) {
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(w);
  }
  return *this;
}

std::string AgreementReport::summary() const {
  std::ostringstream out;
  out << "graphs: " << graphs << "\n"
      << "queries: " << queries << "\n"
      << "statements: " << statements << "\n"
      << "oracle skipped: " << oracle_skipped << "\n"
      << "set disagreements: " << set_disagreements << "\n"
      << "moral disagreements: " << moral_disagreements << "\n"
      << "early-stop disagreements: " << early_stop_disagreements << "\n"
      << "marriage disagreements: " << marriage_disagreements << "\n";
  for (const auto& w : witnesses) out << "witness: " << w << "\n";
  return out.str();
}

AgreementReport check_agreement(const Dag& dag, const AgreementOptions& options) {
  AgreementReport report;
  report.graphs = 1;
  Checker checker(dag, report);
  const std::size_t n = dag.node_count();
  if (n == 0) return report;

  if (n <= options.exhaustive_max_nodes) {
    for (std::uint32_t j = 0; j < n; ++j) {
      std::vector<NodeId> rest;
      for (std::uint32_t v = 0; v < n; ++v) {
        if (v != j) rest.push_back(NodeId(v));
      }
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rest.size()); ++bits) {
        std::vector<NodeId> l;
        for (std::size_t i = 0; i < rest.size(); ++i) {
          if (bits >> i & 1U) l.push_back(rest[i]);
        }
        checker.query({NodeSet{NodeId(j)}, NodeSet(std::move(l))});
      }
    }
    return report;
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
  std::bernoulli_distribution coin(0.3);
  for (std::size_t q = 0; q < options.sampled_queries; ++q) {
    NodeId j(pick(rng));
    std::vector<NodeId> l;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (v != j.value && coin(rng)) l.push_back(NodeId(v));
    }
    checker.query({NodeSet{j}, NodeSet(std::move(l))});
  }
  return report;
}

}  // namespace dsep
