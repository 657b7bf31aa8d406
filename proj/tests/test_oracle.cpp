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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dsep/generators.hpp"
#include "test_support.hpp"

namespace dsep {
namespace {

using testing::all_nodes;
using testing::at;
using testing::collider7;
using testing::two_roots;
using testing::set_of;

std::vector<std::string> spelled(const Dag& dag, const Trail& t) {
  std::vector<std::string> out;
  for (NodeId v : t.nodes) out.push_back(dag.name(v));
  return out;
}

DiscreteNetwork uniform_network(const Dag& dag) {
  DiscreteNetwork net{dag, std::vector<std::uint32_t>(dag.node_count(), 2), {}};
  for (std::uint32_t v = 0; v < dag.node_count(); ++v) {
    std::size_t configs = std::size_t{1} << dag.parents(NodeId(v)).size();
    net.cpts.push_back(std::vector<double>(2 * configs, 0.5));
  }
  return net;
}

TEST(Trails, Collider7SimpleTrails) {
  Dag dag = collider7();
  std::vector<Trail> trails = enumerate_simple_trails(dag, at(dag, "n4"), at(dag, "n3"));
  ASSERT_EQ(trails.size(), 2u);
  std::vector<std::vector<std::string>> names{spelled(dag, trails[0]), spelled(dag, trails[1])};
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names[0], (std::vector<std::string>{"n4", "n2", "n3"}));
  EXPECT_EQ(names[1], (std::vector<std::string>{"n4", "n5", "n3"}));
}

TEST(Trails, TwoRootsSingleTrail) {
  Dag dag = two_roots();
  std::vector<Trail> trails = enumerate_simple_trails(dag, at(dag, "3"), at(dag, "2"));
  ASSERT_EQ(trails.size(), 1u);
  EXPECT_EQ(spelled(dag, trails[0]), (std::vector<std::string>{"3", "1", "4", "2"}));
  EXPECT_TRUE(trails[0].head_to_head(2));
}

TEST(Trails, DistinctLinkTrailsIncludeSimpleOnes) {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 100; ++round) {
    Dag dag = random_small_dag(5, rng);
    if (dag.node_count() < 2) continue;
    std::size_t simple = enumerate_simple_trails(dag, NodeId(0), NodeId(1)).size();
    std::size_t all = enumerate_trails(dag, NodeId(0), NodeId(1)).size();
    EXPECT_LE(simple, all);
    for (const Trail& t : enumerate_trails(dag, NodeId(0), NodeId(1))) {
      EXPECT_NO_THROW(validate_trail(dag, t));
    }
  }
}

TEST(Trails, ScaleGuard) {
  Dag big = chain_dag(kMaxTrailOracleNodes + 1);
  EXPECT_THROW(enumerate_simple_trails(big, NodeId(0), NodeId(1)), Error);
  EXPECT_THROW(dsep_bruteforce(big, {NodeSet{NodeId(0)}, {}}), Error);
}

TEST(Bruteforce, ReferenceQueries) {
  Dag seven = collider7();
  EXPECT_EQ(dsep_bruteforce(seven, {set_of(seven, {"n4"}), set_of(seven, {"n2"})}), set_of(seven, {"n3"}));
  EXPECT_TRUE(dsep_bruteforce(seven, {set_of(seven, {"n4"}), set_of(seven, {"n2", "n6"})}).empty());
  Dag roots = two_roots();
  EXPECT_EQ(dsep_bruteforce(roots, {set_of(roots, {"2"}), {}}), set_of(roots, {"1", "3"}));
}

TEST(Bruteforce, NonSimpleTrailsNeverChangeTheVerdict) {
  std::mt19937_64 rng(72);
  std::bernoulli_distribution coin(0.35);
  for (int round = 0; round < 300; ++round) {
    Dag dag = random_small_dag(5, rng);
    NodeSet j{NodeId(static_cast<std::uint32_t>(rng() % dag.node_count()))};
    std::vector<NodeId> l;
    for (NodeId v : all_nodes(dag).minus(j)) {
      if (coin(rng)) l.push_back(v);
    }
    SeparationQuery q{j, NodeSet(l)};
    EXPECT_EQ(dsep_bruteforce(dag, q, TrailFamily::kSimple),
              dsep_bruteforce(dag, q, TrailFamily::kAllDistinctLinks));
  }
}

TEST(Network, RandomIsDeterministicAndValid) {
  Dag dag = collider7();
  DiscreteNetwork a = random_network(dag, 3, 99);
  DiscreteNetwork b = random_network(dag, 3, 99);
  DiscreteNetwork c = random_network(dag, 3, 100);
  EXPECT_EQ(a.cpts, b.cpts);
  EXPECT_NE(a.cpts, c.cpts);
  EXPECT_NO_THROW(validate(a));
  for (const auto& table : a.cpts) {
    for (double p : table) EXPECT_GT(p, 0.0);
  }
  EXPECT_EQ(a.cpts[at(dag, "n5").index()].size(), 27u);
}

TEST(Network, RejectsBadShapes) {
  Dag dag = two_roots();
  EXPECT_THROW(random_network(dag, 1, 1), Error);
  DiscreteNetwork net = uniform_network(dag);
  net.cpts[0][0] = 0.7;
  EXPECT_THROW(validate(net), Error);
  net = uniform_network(dag);
  net.cpts[3].pop_back();
  EXPECT_THROW(validate(net), Error);
}

TEST(Joint, SingleNode) {
  std::vector<std::string> names{"a"};
  Dag dag = build_dag(names, {});
  DiscreteNetwork net{dag, {2}, {{0.3, 0.7}}};
  JointTable t = joint(net);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_DOUBLE_EQ(t[0], 0.3);
  EXPECT_DOUBLE_EQ(t[1], 0.7);
}

TEST(Joint, IndependentPairAndTwoRootsUniform) {
  std::vector<std::string> names{"a", "b"};
  Dag pair = build_dag(names, {});
  JointTable t = joint(uniform_network(pair));
  ASSERT_EQ(t.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(t[i], 0.25);

  JointTable roots = joint(uniform_network(two_roots()));
  ASSERT_EQ(roots.size(), 16u);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_DOUBLE_EQ(roots[i], 1.0 / 16);
}

TEST(Joint, ParentConfigurationOrder) {
  // b copies a.
  std::vector<std::string> names{"a", "b"};
  std::vector<std::pair<std::string, std::string>> edges{{"a", "b"}};
  Dag dag = build_dag(names, edges);
  DiscreteNetwork net{dag, {2, 2}, {{0.4, 0.6}, {1.0, 0.0, 0.0, 1.0}}};
  JointTable t = joint(net);
  EXPECT_DOUBLE_EQ(t[0], 0.4);  // a=0 b=0
  EXPECT_DOUBLE_EQ(t[1], 0.0);  // a=1 b=0
  EXPECT_DOUBLE_EQ(t[2], 0.0);  // a=0 b=1
  EXPECT_DOUBLE_EQ(t[3], 0.6);  // a=1 b=1
  EXPECT_EQ(t.value_of(3, NodeId(1)), 1u);
  EXPECT_EQ(t.value_of(1, NodeId(1)), 0u);
}

TEST(Joint, MassIsConserved) {
  std::mt19937_64 rng(73);
  for (int round = 0; round < 50; ++round) {
    Dag dag = random_small_dag(7, rng);
    JointTable t = joint(random_network(dag, 2 + round % 2, rng()));
    EXPECT_NEAR(t.mass(), 1.0, 1e-12);
  }
}

TEST(Joint, ScaleGuard) {
  Dag big = Dag::from_edges(21, {});
  EXPECT_THROW(joint(uniform_network(big)), Error);
}

TEST(CiGap, Examples) {
  std::vector<std::string> names{"a", "b"};
  Dag pair = build_dag(names, {});
  JointTable t = joint(uniform_network(pair));
  EXPECT_TRUE(ci_holds(t, NodeSet{NodeId(0)}, NodeSet{NodeId(1)}, {}, 1e-12));

  Dag roots = two_roots();
  JointTable r = joint(random_network(roots, 2, 5));
  EXPECT_TRUE(ci_holds(r, set_of(roots, {"2"}), set_of(roots, {"3"}), {}, 1e-9));
  EXPECT_FALSE(ci_holds(r, set_of(roots, {"3"}), set_of(roots, {"4"}), {}, 1e-6));
}

TEST(CiGap, SkipsZeroProbabilityConditions) {
  // a is always 0 and b copies it, so b = 1 never occurs.
  std::vector<std::string> names{"a", "b", "c"};
  std::vector<std::pair<std::string, std::string>> edges{{"a", "b"}};
  Dag dag = build_dag(names, edges);
  DiscreteNetwork net{dag, {2, 2, 2}, {{1.0, 0.0}, {1.0, 0.0, 0.0, 1.0}, {0.2, 0.8}}};
  ASSERT_NO_THROW(validate(net));
  JointTable t = joint(net);
  double gap = ci_gap(t, set_of(dag, {"a"}), set_of(dag, {"c"}), set_of(dag, {"b"}));
  EXPECT_FALSE(std::isnan(gap));
  EXPECT_LE(gap, 1e-12);
}

TEST(CiGap, NoisyXorCollider) {
  Dag roots = two_roots();
  DiscreteNetwork net = uniform_network(roots);
  // 4 = 1 xor 2 with 10% noise; parents of 4 in in-list order 1, 2.
  std::vector<double>& t4 = net.cpts[at(roots, "4").index()];
  for (std::size_t config = 0; config < 4; ++config) {
    std::size_t x = (config & 1U) ^ (config >> 1 & 1U);
    t4[config * 2 + x] = 0.9;
    t4[config * 2 + (1 - x)] = 0.1;
  }
  ASSERT_NO_THROW(validate(net));
  JointTable t = joint(net);
  // Marginally independent, dependent given the collider.
  EXPECT_TRUE(ci_holds(t, set_of(roots, {"1"}), set_of(roots, {"2"}), {}, 1e-12));
  EXPECT_FALSE(ci_holds(t, set_of(roots, {"1"}), set_of(roots, {"2"}), set_of(roots, {"4"}), 1e-6));
}

TEST(Numeric, SmallGraphs) {
  Dag roots = two_roots();
  NumericReport r = check_numeric(roots);
  EXPECT_EQ(r.soundness_violations, 0u);
  EXPECT_EQ(r.persistent_misses, 0u);
  // 6 pairs times 4 conditioning sets each.
  EXPECT_EQ(r.separated_triples + r.connected_triples, 24u);
  EXPECT_EQ(r.soundness_confirmations, r.separated_triples * 5);

  Dag seven = collider7();
  NumericOptions o;
  o.trials = 3;
  NumericReport r1 = check_numeric(seven, o);
  EXPECT_EQ(r1.soundness_violations, 0u);
  EXPECT_EQ(r1.persistent_misses, 0u);
  EXPECT_GT(r1.separated_triples, 0u);
}

TEST(Numeric, ScaleGuardBeforeEnumeration) {
  try {
    check_numeric(chain_dag(40));
    FAIL() << "oversized graph accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleScaleExceeded);
  }
}

TEST(Numeric, SamplesLargeTripleSpaces) {
  NumericOptions o;
  o.trials = 1;
  o.max_triples = 50;
  NumericReport r = check_numeric(chain_dag(12), o);
  EXPECT_EQ(r.separated_triples + r.connected_triples, 50u);
  EXPECT_EQ(r.soundness_violations, 0u);
}

TEST(Numeric, RejectsNonPositiveTrials) {
  NumericOptions o;
  o.trials = 0;
  EXPECT_THROW(check_numeric(two_roots(), o), Error);
}

}  // namespace
}  // namespace dsep
