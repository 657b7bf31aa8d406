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

#include "dsep/moral.hpp"

#include <algorithm>

namespace dsep {

MoralGraph moralize(const Dag& dag, const IndependenceStatement& s, MarriageRule rule) {
  validate(dag, s);
  MoralGraph g;
  g.nodes = ancestral_set(dag, s.j.united(s.k).united(s.l));
  DescendantTable table = descendant_table(dag, s.l);

  auto add = [&g](NodeId a, NodeId b) {
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
  };
  for (NodeId child : g.nodes) {
    auto in = dag.in_edges(child);
    // Parents of a kept node are ancestors too, so they are kept.
    for (EdgeId id : in) add(dag.edge(id).tail, child);
    if (rule == MarriageRule::kRestricted && !table[child]) continue;
    for (std::size_t a = 0; a < in.size(); ++a) {
      for (std::size_t b = a + 1; b < in.size(); ++b) {
        add(dag.edge(in[a]).tail, dag.edge(in[b]).tail);
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

bool moral_check(const Dag& dag, const IndependenceStatement& s, MarriageRule rule) {
  MoralGraph g = moralize(dag, s, rule);
  const std::size_t n = dag.node_count();

  std::vector<std::size_t> offsets(n + 1, 0);
  for (const auto& [a, b] : g.edges) {
    ++offsets[a.index() + 1];
    ++offsets[b.index() + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  std::vector<NodeId> adjacent(offsets.back());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [a, b] : g.edges) {
    adjacent[cursor[a.index()]++] = b;
    adjacent[cursor[b.index()]++] = a;
  }

  std::vector<char> blocked = s.l.mask(n);
  std::vector<char> target = s.k.mask(n);
  std::vector<char> seen = s.j.mask(n);
  std::vector<NodeId> stack(s.j.begin(), s.j.end());
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (std::size_t i = offsets[v.index()]; i < offsets[v.index() + 1]; ++i) {
      NodeId w = adjacent[i];
      if (seen[w.index()] || blocked[w.index()]) continue;
      if (target[w.index()]) return false;
      seen[w.index()] = 1;
      stack.push_back(w);
    }
  }
  return true;
}

}  // namespace dsep
