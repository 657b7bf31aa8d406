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

#include <utility>
#include <vector>

#include "dsep/dag.hpp"
#include "dsep/separation.hpp"

namespace dsep {

/// Which co-parents get married when moralizing the ancestral subgraph.
enum class MarriageRule {
  /// Only parents of a common child that is or has a descendant in L.
  kRestricted,
  /// Parents of any common child (textbook moralization).
  kFull,
};

/// Undirected graph over the ancestral subgraph of J ∪ K ∪ L. Node ids are
/// those of the source dag.
struct MoralGraph {
  NodeSet nodes;
  /// Unordered pairs stored as (smaller id, larger id), sorted, unique.
  std::vector<std::pair<NodeId, NodeId>> edges;
};

MoralGraph moralize(const Dag& dag, const IndependenceStatement& s,
                    MarriageRule rule = MarriageRule::kRestricted);

/// Separation test in the moral graph: true iff every undirected path from J
/// to K passes through L.
bool moral_check(const Dag& dag, const IndependenceStatement& s,
                 MarriageRule rule = MarriageRule::kRestricted);

}  // namespace dsep
