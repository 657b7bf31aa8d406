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

#include "dsep/dag.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "dsep/error.hpp"
#include "dsep/generators.hpp"
#include "test_support.hpp"

namespace dsep {
namespace {

using testing::at;
using testing::collider7;
using testing::two_roots;
using testing::set_of;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected dsep::Error";
  return ErrorCode::kInvalidArgument;
}

// Independent check: depth-first search along out-edges from v.
bool reaches(const Dag& dag, NodeId from, const NodeSet& targets) {
  std::vector<char> seen(dag.node_count(), 0);
  std::vector<NodeId> stack{from};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (targets.contains(v)) return true;
    if (seen[v.index()]) continue;
    seen[v.index()] = 1;
    for (NodeId c : dag.children(v)) stack.push_back(c);
  }
  return false;
}

TEST(BuildDag, SingleNode) {
  std::vector<std::string> names{"a"};
  Dag dag = build_dag(names, {});
  EXPECT_EQ(dag.node_count(), 1u);
  EXPECT_EQ(dag.edge_count(), 0u);
}

TEST(BuildDag, TwoCycleRejected) {
  std::vector<std::string> names{"a", "b"};
  std::vector<std::pair<std::string, std::string>> edges{{"a", "b"}, {"b", "a"}};
  try {
    build_dag(names, edges);
    FAIL() << "cycle accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCycleDetected);
    std::string message = e.what();
    EXPECT_NE(message.find("a -> b"), std::string::npos) << message;
    EXPECT_NE(message.find("b -> a"), std::string::npos) << message;
  }
}

TEST(BuildDag, Collider7) {
  Dag dag = collider7();
  EXPECT_EQ(dag.node_count(), 7u);
  EXPECT_EQ(dag.edge_count(), 7u);
  EXPECT_EQ(dag.name(NodeId(0)), "n1");
  EXPECT_EQ(dag.parents(at(dag, "n5")), (std::vector<NodeId>{at(dag, "n3"), at(dag, "n4")}));
  EXPECT_EQ(dag.topological_order().size(), 7u);
}

TEST(BuildDag, StructuralErrors) {
  std::vector<std::string> names{"a", "b"};
  using Edges = std::vector<std::pair<std::string, std::string>>;
  EXPECT_EQ(code_of([&] { build_dag(names, Edges{{"a", "a"}}); }), ErrorCode::kSelfLoop);
  EXPECT_EQ(code_of([&] { build_dag(names, Edges{{"a", "b"}, {"a", "b"}}); }),
            ErrorCode::kDuplicateEdge);
  EXPECT_EQ(code_of([&] { build_dag(names, Edges{{"a", "c"}}); }), ErrorCode::kUnknownEndpoint);
  std::vector<std::string> twice{"a", "a"};
  EXPECT_EQ(code_of([&] { build_dag(twice, Edges{}); }), ErrorCode::kDuplicateName);
}

TEST(BuildDag, CycleWitnessIsACycle) {
  std::vector<Edge> edges{{NodeId(0), NodeId(1)}, {NodeId(1), NodeId(2)}, {NodeId(2), NodeId(3)},
                          {NodeId(3), NodeId(1)}, {NodeId(0), NodeId(4)}};
  std::vector<NodeId> cycle = find_cycle(5, edges);
  ASSERT_EQ(cycle.size(), 3u);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Edge step{cycle[i], cycle[(i + 1) % cycle.size()]};
    EXPECT_NE(std::find(edges.begin(), edges.end(), step), edges.end());
  }
  EXPECT_TRUE(find_cycle(3, std::vector<Edge>{{NodeId(0), NodeId(1)}}).empty());
}

TEST(BuildDag, InAndOutListsAreTransposes) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    Dag dag = random_dag(7, 0.4, rng);
    std::size_t in_total = 0;
    for (std::uint32_t v = 0; v < dag.node_count(); ++v) {
      for (EdgeId e : dag.out_edges(NodeId(v))) EXPECT_EQ(dag.edge(e).tail, NodeId(v));
      for (EdgeId e : dag.in_edges(NodeId(v))) EXPECT_EQ(dag.edge(e).head, NodeId(v));
      in_total += dag.in_edges(NodeId(v)).size();
    }
    EXPECT_EQ(in_total, dag.edge_count());
  }
}

TEST(DescendantTable, Collider7ConditionedOnN6) {
  Dag dag = collider7();
  DescendantTable table = descendant_table(dag, set_of(dag, {"n6"}));
  for (const char* n : {"n1", "n2", "n3", "n4", "n5", "n6"}) EXPECT_TRUE(table[at(dag, n)]) << n;
  EXPECT_FALSE(table[at(dag, "n7")]);
}

TEST(DescendantTable, EmptyConditioningIsAllFalse) {
  Dag dag = collider7();
  DescendantTable table = descendant_table(dag, {});
  for (std::uint32_t v = 0; v < dag.node_count(); ++v) EXPECT_FALSE(table[NodeId(v)]);
}

TEST(DescendantTable, TwoRootsConditionedOn4) {
  Dag dag = two_roots();
  DescendantTable table = descendant_table(dag, set_of(dag, {"4"}));
  EXPECT_TRUE(table[at(dag, "1")]);
  EXPECT_TRUE(table[at(dag, "2")]);
  EXPECT_TRUE(table[at(dag, "4")]);
  EXPECT_FALSE(table[at(dag, "3")]);
}

TEST(DescendantTable, ForeignNodeRejected) {
  Dag dag = two_roots();
  EXPECT_EQ(code_of([&] { descendant_table(dag, NodeSet{NodeId(9)}); }), ErrorCode::kForeignNode);
}

TEST(DescendantTable, MatchesPathSearchAndAncestralSet) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    Dag dag = random_small_dag(6, rng);
    std::bernoulli_distribution coin(0.3);
    std::vector<NodeId> members;
    for (std::uint32_t v = 0; v < dag.node_count(); ++v) {
      if (coin(rng)) members.push_back(NodeId(v));
    }
    NodeSet l(members);
    DescendantTable table = descendant_table(dag, l);
    NodeSet ancestors = ancestral_set(dag, l);
    for (std::uint32_t v = 0; v < dag.node_count(); ++v) {
      bool expected = reaches(dag, NodeId(v), l);
      EXPECT_EQ(table[NodeId(v)], expected);
      EXPECT_EQ(ancestors.contains(NodeId(v)), expected);
    }
  }
}

TEST(AncestralSet, Examples) {
  Dag roots = two_roots();
  EXPECT_EQ(ancestral_set(roots, set_of(roots, {"3"})), set_of(roots, {"1", "3"}));
  EXPECT_TRUE(ancestral_set(roots, {}).empty());
  Dag seven = collider7();
  EXPECT_EQ(ancestral_set(seven, set_of(seven, {"n4", "n2", "n3"})), set_of(seven, {"n1", "n2", "n3", "n4"}));
}

TEST(AncestralSet, MonotoneAndIdempotent) {
  std::mt19937_64 rng(8);
  std::bernoulli_distribution coin(0.4);
  for (int round = 0; round < 300; ++round) {
    Dag dag = random_small_dag(6, rng);
    std::vector<NodeId> small;
    std::vector<NodeId> large;
    for (std::uint32_t v = 0; v < dag.node_count(); ++v) {
      bool in_small = coin(rng);
      if (in_small) small.push_back(NodeId(v));
      if (in_small || coin(rng)) large.push_back(NodeId(v));
    }
    NodeSet a = ancestral_set(dag, NodeSet(small));
    NodeSet b = ancestral_set(dag, NodeSet(large));
    EXPECT_TRUE(a.is_subset_of(b));
    EXPECT_EQ(ancestral_set(dag, a), a);
  }
}

TEST(DoubledGraph, SingleEdge) {
  std::vector<std::string> names{"a", "b"};
  std::vector<std::pair<std::string, std::string>> edges{{"a", "b"}};
  Dag dag = build_dag(names, edges);
  DoubledGraph d(dag);
  ASSERT_EQ(d.link_count(), 2u);
  EXPECT_EQ(d.graph().link(0).tail, NodeId(0));
  EXPECT_EQ(d.graph().link(0).head, NodeId(1));
  EXPECT_EQ(DoubledGraph::orientation(0), Orientation::kOriginal);
  EXPECT_EQ(d.graph().link(1).tail, NodeId(1));
  EXPECT_EQ(d.graph().link(1).head, NodeId(0));
  EXPECT_EQ(DoubledGraph::orientation(1), Orientation::kReversed);
}

TEST(DoubledGraph, CountsAndTags) {
  Dag seven = collider7();
  EXPECT_EQ(doubled_graph(seven).link_count(), 14u);
  Dag empty = Dag::from_edges(3, {});
  EXPECT_EQ(doubled_graph(empty).link_count(), 0u);

  std::mt19937_64 rng(3);
  for (int round = 0; round < 100; ++round) {
    Dag dag = random_small_dag(6, rng);
    DoubledGraph d(dag);
    ASSERT_EQ(d.link_count(), 2 * dag.edge_count());
    for (EdgeId e = 0; e < dag.edge_count(); ++e) {
      const Link& fwd = d.graph().link(DoubledGraph::original_link(e));
      const Link& back = d.graph().link(DoubledGraph::reversed_link(e));
      EXPECT_EQ(fwd.tail, dag.edge(e).tail);
      EXPECT_EQ(fwd.head, dag.edge(e).head);
      EXPECT_EQ(back.tail, dag.edge(e).head);
      EXPECT_EQ(back.head, dag.edge(e).tail);
      EXPECT_EQ(DoubledGraph::orientation(DoubledGraph::original_link(e)), Orientation::kOriginal);
      EXPECT_EQ(DoubledGraph::orientation(DoubledGraph::reversed_link(e)), Orientation::kReversed);
    }
  }
}

TEST(Dag, ReversedFlipsEveryEdge) {
  Dag dag = collider7();
  Dag rev = dag.reversed();
  ASSERT_EQ(rev.edge_count(), dag.edge_count());
  for (EdgeId e = 0; e < dag.edge_count(); ++e) {
    EXPECT_EQ(rev.edge(e).tail, dag.edge(e).head);
    EXPECT_EQ(rev.edge(e).head, dag.edge(e).tail);
  }
  EXPECT_EQ(rev.name(NodeId(6)), "n7");
}

}  // namespace
}  // namespace dsep
