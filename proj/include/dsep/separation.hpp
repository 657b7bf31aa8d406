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

#include <cstdint>
#include <vector>

#include "dsep/dag.hpp"
#include "dsep/node_set.hpp"
#include "dsep/reachability.hpp"

namespace dsep {

/// (J, L): find every node d-separated from J given L.
struct SeparationQuery {
  NodeSet j;
  NodeSet l;
};

/// I(J, L, K): does L d-separate J from K?
struct IndependenceStatement {
  NodeSet j;
  NodeSet l;
  NodeSet k;
};

/// Throws ForeignNode, EmptyStartSet or OverlappingSets.
void validate(const Dag& dag, const SeparationQuery& q);
/// As above, plus EmptyTargetSet when K is empty.
void validate(const Dag& dag, const IndependenceStatement& s);

/// A link of the doubled graph spelled out by its endpoints.
struct DoubledLink {
  NodeId tail;
  NodeId head;
  Orientation orientation;
};

/// Legality of traversing `first` then `second` in the doubled graph. The
/// pair is legal iff it does not bounce back over the same base edge and
/// either the middle node is head-to-head and is or has a descendant in L,
/// or it is not head-to-head and lies outside L.
bool dsep_legal_pair(const Dag& dag, const DescendantTable& table, const NodeSet& conditioning,
                     DoubledLink first, DoubledLink second);

/// The same rule addressed by link id, for use with find_reachable().
class DsepLegality {
 public:
  DsepLegality(const DoubledGraph& doubled, const DescendantTable& table);

  bool operator()(LinkId first, LinkId second) const;

 private:
  const DoubledGraph* doubled_;
  const DescendantTable* table_;
  std::vector<char> in_conditioning_;
};

/// Nodes d-separated from q.j by q.l, via link-level forbidden-pair
/// reachability on the doubled graph. Ascending id order.
NodeSet dsep_set(const Dag& dag, const SeparationQuery& q);

struct SweepStats {
  /// Adjacency entries scanned; at most 2|E| plus the start fan-out.
  std::uint64_t links_scanned = 0;
  /// (node, arrival) states visited.
  std::uint64_t states_visited = 0;
};

/// Same contract as dsep_set() in O(|V| + |E|): traversal state is the node
/// plus whether it was entered along an edge pointing into it, and each
/// node's in-list and out-list is expanded at most once.
NodeSet dsep_set_fast(const Dag& dag, const SeparationQuery& q, SweepStats* stats = nullptr);

enum class Engine { kFast, kFaithful };

struct CheckOptions {
  Engine engine = Engine::kFast;
  /// Stop the sweep as soon as a node of K is reached.
  bool early_stop = true;
};

/// True iff every node of s.k is d-separated from s.j given s.l.
bool is_dseparated(const Dag& dag, const IndependenceStatement& s, CheckOptions options = {});

/// One step of a trail: a base edge and whether it is walked tail-to-head.
struct TrailLink {
  EdgeId edge;
  bool forward;
};

/// A walk in the skeleton of a dag. nodes.size() == links.size() + 1.
struct Trail {
  std::vector<NodeId> nodes;
  std::vector<TrailLink> links;

  /// Resolves consecutive nodes to base edges. Throws MalformedTrail when two
  /// neighbours are not adjacent.
  static Trail from_nodes(const Dag& dag, std::vector<NodeId> nodes);

  /// Interior position p with both adjacent links pointing into nodes[p].
  bool head_to_head(std::size_t p) const;
};

/// Throws MalformedTrail unless the trail is well formed in `dag`: at least
/// one link, each link joins its neighbours, and no link repeats.
void validate_trail(const Dag& dag, const Trail& t);

bool is_active_trail(const Dag& dag, const Trail& t, const NodeSet& conditioning);
/// Variant reusing a descendant table built for the conditioning set.
bool is_active_trail(const Dag& dag, const Trail& t, const DescendantTable& table);

}  // namespace dsep
