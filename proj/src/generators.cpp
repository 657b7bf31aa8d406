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

#include "dsep/generators.hpp"

#include <algorithm>
#include <numeric>

namespace dsep {
namespace {

NodeId id(std::size_t i) { return NodeId(static_cast<std::uint32_t>(i)); }

std::vector<std::uint32_t> permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace

Dag chain_dag(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (std::size_t i = 1; i < n; ++i) edges.push_back({id(i - 1), id(i)});
  return Dag::from_edges(n, std::move(edges));
}

Dag star_dag(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (std::size_t i = 1; i < n; ++i) edges.push_back({id(0), id(i)});
  return Dag::from_edges(n, std::move(edges));
}

Dag random_dag(std::size_t n, double edge_probability, std::mt19937_64& rng) {
  auto order = permutation(n, rng);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.push_back({NodeId(order[a]), NodeId(order[b])});
    }
  }
  return Dag::from_edges(n, std::move(edges));
}

Dag random_sparse_dag(std::size_t n, std::size_t parents_per_node, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto relabel = permutation(n, rng);
  std::vector<Edge> edges;
  edges.reserve(n * parents_per_node);
  std::vector<std::uint32_t> picked;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t want = std::min(i, parents_per_node);
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    picked.clear();
    while (picked.size() < want) {
      auto p = static_cast<std::uint32_t>(pick(rng));
      if (std::find(picked.begin(), picked.end(), p) == picked.end()) picked.push_back(p);
    }
    for (std::uint32_t p : picked) edges.push_back({NodeId(relabel[p]), NodeId(relabel[i])});
  }
  return Dag::from_edges(n, std::move(edges));
}

Dag random_small_dag(std::size_t max_nodes, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(1, max_nodes));
  const std::size_t n = size(rng);
  auto order = permutation(n, rng);
  std::vector<Edge> edges;
  std::uniform_int_distribution<int> family(0, 7);
  switch (family(rng)) {
    case 0:  // chain
      for (std::size_t i = 1; i < n; ++i) edges.push_back({NodeId(order[i - 1]), NodeId(order[i])});
      break;
    case 1:  // fork
      for (std::size_t i = 1; i < n; ++i) edges.push_back({NodeId(order[0]), NodeId(order[i])});
      break;
    case 2:  // collider
      for (std::size_t i = 1; i < n; ++i) edges.push_back({NodeId(order[i]), NodeId(order[0])});
      break;
    default: {
      std::uniform_real_distribution<double> density(0.2, 0.8);
      std::bernoulli_distribution coin(density(rng));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          if (coin(rng)) edges.push_back({NodeId(order[a]), NodeId(order[b])});
        }
      }
    }
  }
  return Dag::from_edges(n, std::move(edges));
}

}  // namespace dsep
