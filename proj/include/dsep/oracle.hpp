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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dsep/dag.hpp"
#include "dsep/separation.hpp"

namespace dsep {

// Ground-truth machinery for tests and the verify command. Everything here
// is exponential in the graph size and guarded accordingly.

inline constexpr std::size_t kMaxTrailOracleNodes = 12;
inline constexpr std::size_t kMaxJointEntries = std::size_t{1} << 20;

/// All trails from a to b that repeat no node.
std::vector<Trail> enumerate_simple_trails(const Dag& dag, NodeId a, NodeId b);

/// All trails from a to b that repeat no link; nodes may repeat. Only used to
/// confirm that restricting to simple trails never changes a verdict.
std::vector<Trail> enumerate_trails(const Dag& dag, NodeId a, NodeId b);

enum class TrailFamily { kSimple, kAllDistinctLinks };

/// Nodes outside J ∪ L with no active trail from J, by direct application of
/// the definition to every enumerated trail.
NodeSet dsep_bruteforce(const Dag& dag, const SeparationQuery& q,
                        TrailFamily family = TrailFamily::kSimple);

/// Conditional probability tables over a dag. The table of node v is laid
/// out as cpt[v][config * arity[v] + value], where `config` is the mixed-radix
/// index of the parent values in in-list order, first parent least
/// significant.
struct DiscreteNetwork {
  Dag dag;
  std::vector<std::uint32_t> arity;
  std::vector<std::vector<double>> cpts;
};

/// Throws InvalidArgument unless shapes match, entries lie in [0, 1] and every
/// column sums to one within 1e-12.
void validate(const DiscreteNetwork& net);

/// Seeded, strictly positive tables with `arity` values per variable.
DiscreteNetwork random_network(const Dag& dag, std::uint32_t arity, std::uint64_t seed);

/// Exact joint distribution. Entry index is mixed radix over node ids, node 0
/// least significant.
class JointTable {
 public:
  JointTable(std::vector<std::uint32_t> arity, std::vector<double> probabilities);

  const std::vector<std::uint32_t>& arity() const { return arity_; }
  const std::vector<double>& probabilities() const { return probabilities_; }
  std::size_t size() const { return probabilities_.size(); }
  double operator[](std::size_t i) const { return probabilities_[i]; }
  double mass() const;

  /// Value taken by variable v in entry `index`.
  std::uint32_t value_of(std::size_t index, NodeId v) const {
    return static_cast<std::uint32_t>((index / strides_[v.index()]) % arity_[v.index()]);
  }

 private:
  std::vector<std::uint32_t> arity_;
  std::vector<std::size_t> strides_;
  std::vector<double> probabilities_;
};

JointTable joint(const DiscreteNetwork& net);

/// Largest |P(x_J, x_K | x_L) - P(x_J | x_L) P(x_K | x_L)| over assignments
/// with P(x_L) > 0, by exact summation.
double ci_gap(const JointTable& table, const NodeSet& j, const NodeSet& k, const NodeSet& l);

bool ci_holds(const JointTable& table, const NodeSet& j, const NodeSet& k, const NodeSet& l,
              double tol);

struct NumericOptions {
  int trials = 5;
  std::uint64_t seed = 1;
  std::uint32_t arity = 2;
  double soundness_tol = 1e-9;
  double dependence_tol = 1e-6;
  /// Cap on (j, L, k) triples per dag; all triples are used when they fit.
  std::size_t max_triples = 4096;
};

struct NumericReport {
  std::size_t separated_triples = 0;
  /// (triple, network) pairs where CI held as required.
  std::size_t soundness_confirmations = 0;
  std::size_t soundness_violations = 0;
  std::size_t connected_triples = 0;
  /// Connected triples showing dependence in the first batch of networks.
  std::size_t dependence_found = 0;
  /// Connected triples that needed the reseeded retry batch.
  std::size_t retried = 0;
  std::size_t persistent_misses = 0;
  std::vector<std::string> witnesses;

  NumericReport& operator+=(const NumericReport& other);
  std::string summary() const;
};

/// Numeric check of d-separation against sampled networks: separated triples
/// must be conditionally independent in every network, connected triples
/// should show dependence in at least one.
NumericReport check_numeric(const Dag& dag, const NumericOptions& options = {});

}  // namespace dsep
