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
#include <random>

#include "dsep/dag.hpp"

namespace dsep {

/// 0 -> 1 -> ... -> n-1.
Dag chain_dag(std::size_t n);

/// Hub 0 with edges 0 -> i for i = 1 .. n-1.
Dag star_dag(std::size_t n);

/// Every ordered pair (a, b) of a random permutation gets a -> b with
/// probability `edge_probability`.
Dag random_dag(std::size_t n, double edge_probability, std::mt19937_64& rng);

/// Sparse dag: node i >= 1 draws min(i, parents_per_node) distinct parents
/// uniformly among nodes 0 .. i-1; ids are then shuffled.
Dag random_sparse_dag(std::size_t n, std::size_t parents_per_node, std::uint64_t seed);

/// Small test corpus member with 1..max_nodes nodes: chains, forks and
/// colliders over a random node order, otherwise an Erdős–Rényi dag.
Dag random_small_dag(std::size_t max_nodes, std::mt19937_64& rng);

}  // namespace dsep
