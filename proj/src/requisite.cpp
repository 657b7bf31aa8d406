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

#include "dsep/requisite.hpp"

namespace dsep {

AugmentedDag augment_dummies(const Dag& dag) {
  const std::size_t n = dag.node_count();
  std::vector<Edge> edges(dag.edges().begin(), dag.edges().end());
  edges.reserve(edges.size() + n);
  for (std::size_t v = 0; v < n; ++v) {
    edges.push_back({NodeId(static_cast<std::uint32_t>(n + v)), NodeId(static_cast<std::uint32_t>(v))});
  }
  std::vector<std::string> names;
  names.reserve(2 * n);
  for (std::size_t v = 0; v < n; ++v) names.push_back(dag.name(NodeId(static_cast<std::uint32_t>(v))));
  for (std::size_t v = 0; v < n; ++v) names.push_back(names[v] + "'");
  return AugmentedDag(Dag::from_edges(2 * n, std::move(edges), std::move(names)), n);
}

NodeSet requisite_parameters(const Dag& dag, const SeparationQuery& q) {
  validate(dag, q);
  AugmentedDag aug = augment_dummies(dag);
  NodeSet separated = dsep_set_fast(aug.dag(), q);
  NodeSet needed;
  for (std::size_t v = 0; v < dag.node_count(); ++v) {
    NodeId base(static_cast<std::uint32_t>(v));
    if (!separated.contains(aug.dummy_of(base))) needed.insert(base);
  }
  return needed;
}

NodeSet relevant_variables(const Dag& dag, const SeparationQuery& q) {
  validate(dag, q);
  NodeSet all;
  std::vector<char> every(dag.node_count(), 1);
  all = NodeSet::from_mask(every);
  return all.minus(dsep_set_fast(dag, q)).minus(q.j).minus(q.l);
}

}  // namespace dsep
