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

#include "dsep/separation.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace dsep {
namespace {

// Class-expansion sweep over (node, arrival) states. Entering v along an edge
// that points into v ("down", from a parent) allows continuing to children
// when v is outside L and to parents when v is or has a descendant in L.
// Entering from a child ("up") allows both lists when v is outside L.
template <typename Stop>
class FastSweep {
 public:
  FastSweep(const Dag& dag, const std::vector<char>& in_conditioning,
            const DescendantTable& table, Stop& stop)
      : dag_(dag), stop_(stop), state_(dag.node_count(), 0) {
    for (std::size_t v = 0; v < state_.size(); ++v) {
      if (in_conditioning[v]) state_[v] |= kInL;
      if (table[NodeId(static_cast<std::uint32_t>(v))]) state_[v] |= kOpens;
    }
  }

  void run(const NodeSet& start) {
    for (NodeId j : start) state_[j.index()] |= kReached;
    for (NodeId j : start) {
      if (!expand_children(j) || !expand_parents(j)) return;
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      if (head + kLookahead < queue_.size()) prefetch(queue_[head + kLookahead].first);
      auto [v, down] = queue_[head];
      std::uint8_t s = state_[v.index()];
      bool outside = !(s & kInL);
      if (down) {
        if (outside && !expand_children(v)) return;
        if ((s & kOpens) && !expand_parents(v)) return;
      } else if (outside) {
        if (!expand_children(v) || !expand_parents(v)) return;
      }
    }
  }

  std::vector<char> reached() const {
    std::vector<char> out(state_.size());
    for (std::size_t v = 0; v < state_.size(); ++v) out[v] = (state_[v] & kReached) ? 1 : 0;
    return out;
  }
  bool stopped() const { return stopped_; }
  const SweepStats& stats() const { return stats_; }

 private:
  // Per-node flag bits.
  static constexpr std::uint8_t kInL = 1;
  static constexpr std::uint8_t kOpens = 2;
  static constexpr std::uint8_t kReached = 4;
  static constexpr std::uint8_t kSeenDown = 8;
  static constexpr std::uint8_t kSeenUp = 16;
  static constexpr std::uint8_t kExpandedOut = 32;
  static constexpr std::uint8_t kExpandedIn = 64;

  // Large sparse graphs are latency bound; touch upcoming adjacency early.
  static constexpr std::size_t kLookahead = 8;

  void prefetch(NodeId v) const {
    __builtin_prefetch(dag_.children_view(v).data());
    __builtin_prefetch(&state_[v.index()]);
  }

  bool expand_children(NodeId v) {
    if (state_[v.index()] & kExpandedOut) return true;
    state_[v.index()] |= kExpandedOut;
    for (NodeId w : dag_.children_view(v)) {
      ++stats_.links_scanned;
      if (!visit(w, true)) return false;
    }
    return true;
  }

  bool expand_parents(NodeId v) {
    if (state_[v.index()] & kExpandedIn) return true;
    state_[v.index()] |= kExpandedIn;
    for (NodeId w : dag_.parents_view(v)) {
      ++stats_.links_scanned;
      if (!visit(w, false)) return false;
    }
    return true;
  }

  bool visit(NodeId w, bool down) {
    std::uint8_t& s = state_[w.index()];
    std::uint8_t seen = down ? kSeenDown : kSeenUp;
    if (s & seen) return true;
    s |= seen;
    ++stats_.states_visited;
    queue_.push_back({w, down});
    if (!(s & kReached)) {
      s |= kReached;
      if (stop_(w)) {
        stopped_ = true;
        return false;
      }
    }
    return true;
  }

  const Dag& dag_;
  Stop& stop_;
  std::vector<std::uint8_t> state_;
  std::vector<std::pair<NodeId, bool>> queue_;
  SweepStats stats_;
  bool stopped_ = false;
};

NodeSet complement(std::size_t node_count, const std::vector<char>& reached,
                   const SeparationQuery& q) {
  std::vector<char> keep(node_count, 0);
  for (std::size_t v = 0; v < node_count; ++v) keep[v] = reached[v] ? 0 : 1;
  for (NodeId j : q.j) keep[j.index()] = 0;
  for (NodeId l : q.l) keep[l.index()] = 0;
  return NodeSet::from_mask(keep);
}

bool link_exists(const Dag& dag, const DoubledLink& link) {
  if (link.orientation == Orientation::kOriginal) {
    return dag.find_edge(link.tail, link.head).has_value();
  }
  return dag.find_edge(link.head, link.tail).has_value();
}

}  // namespace

void validate(const Dag& dag, const SeparationQuery& q) {
  check_members(dag, q.j, "J");
  check_members(dag, q.l, "L");
  if (q.j.empty()) throw Error(ErrorCode::kEmptyStartSet, "J must not be empty");
  if (q.j.intersects(q.l)) throw Error(ErrorCode::kOverlappingSets, "J and L must be disjoint");
}

void validate(const Dag& dag, const IndependenceStatement& s) {
  validate(dag, SeparationQuery{s.j, s.l});
  check_members(dag, s.k, "K");
  if (s.k.empty()) throw Error(ErrorCode::kEmptyTargetSet, "K must not be empty");
  if (s.k.intersects(s.j) || s.k.intersects(s.l)) {
    throw Error(ErrorCode::kOverlappingSets, "K must be disjoint from J and L");
  }
}

bool dsep_legal_pair(const Dag& dag, const DescendantTable& table, const NodeSet& conditioning,
                     DoubledLink first, DoubledLink second) {
  if (first.head != second.tail) {
    throw Error(ErrorCode::kNonAdjacentPair, "second link does not start where the first ends");
  }
  if (!link_exists(dag, first) || !link_exists(dag, second)) {
    throw Error(ErrorCode::kInvalidArgument, "link is not part of the doubled graph");
  }
  if (first.tail == second.head) return false;
  NodeId v = first.head;
  bool head_to_head = first.orientation == Orientation::kOriginal &&
                      second.orientation == Orientation::kReversed;
  if (head_to_head) return table[v];
  return !conditioning.contains(v);
}

DsepLegality::DsepLegality(const DoubledGraph& doubled, const DescendantTable& table)
    : doubled_(&doubled),
      table_(&table),
      in_conditioning_(table.conditioning_set().mask(doubled.base().node_count())) {}

bool DsepLegality::operator()(LinkId first, LinkId second) const {
  const LinkGraph& g = doubled_->graph();
  const Link& a = g.link(first);
  const Link& b = g.link(second);
  if (a.tail == b.head) return false;
  bool head_to_head = DoubledGraph::orientation(first) == Orientation::kOriginal &&
                      DoubledGraph::orientation(second) == Orientation::kReversed;
  if (head_to_head) return (*table_)[a.head];
  return !in_conditioning_[a.head.index()];
}

NodeSet dsep_set(const Dag& dag, const SeparationQuery& q) {
  validate(dag, q);
  DescendantTable table = descendant_table(dag, q.l);
  DoubledGraph doubled(dag);
  ReachabilityResult r = find_reachable(doubled.graph(), q.j, DsepLegality(doubled, table));
  return complement(dag.node_count(), r.reached.mask(dag.node_count()), q);
}

NodeSet dsep_set_fast(const Dag& dag, const SeparationQuery& q, SweepStats* stats) {
  validate(dag, q);
  DescendantTable table = descendant_table(dag, q.l);
  std::vector<char> in_conditioning = q.l.mask(dag.node_count());
  NeverStop never;
  FastSweep<NeverStop> sweep(dag, in_conditioning, table, never);
  sweep.run(q.j);
  if (stats) *stats = sweep.stats();
  return complement(dag.node_count(), sweep.reached(), q);
}

bool is_dseparated(const Dag& dag, const IndependenceStatement& s, CheckOptions options) {
  validate(dag, s);
  SeparationQuery q{s.j, s.l};
  if (!options.early_stop) {
    NodeSet separated = options.engine == Engine::kFast ? dsep_set_fast(dag, q) : dsep_set(dag, q);
    return s.k.is_subset_of(separated);
  }

  std::vector<char> in_k = s.k.mask(dag.node_count());
  auto hits_k = [&](NodeId v) { return in_k[v.index()] != 0; };
  DescendantTable table = descendant_table(dag, s.l);
  if (options.engine == Engine::kFast) {
    std::vector<char> in_conditioning = s.l.mask(dag.node_count());
    FastSweep<decltype(hits_k)> sweep(dag, in_conditioning, table, hits_k);
    sweep.run(s.j);
    return !sweep.stopped();
  }
  DoubledGraph doubled(dag);
  ReachabilityResult r = find_reachable(doubled.graph(), s.j, DsepLegality(doubled, table), hits_k);
  return !r.stopped_early;
}

Trail Trail::from_nodes(const Dag& dag, std::vector<NodeId> nodes) {
  Trail t;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (auto e = dag.find_edge(nodes[i], nodes[i + 1])) {
      t.links.push_back({*e, true});
    } else if (auto r = dag.find_edge(nodes[i + 1], nodes[i])) {
      t.links.push_back({*r, false});
    } else {
      throw Error(ErrorCode::kMalformedTrail,
                  dag.name(nodes[i]) + " and " + dag.name(nodes[i + 1]) + " are not adjacent");
    }
  }
  t.nodes = std::move(nodes);
  return t;
}

bool Trail::head_to_head(std::size_t p) const {
  if (p == 0 || p + 1 >= nodes.size()) return false;
  // Walking forward over an edge ends at its head; backward ends at its tail.
  return links[p - 1].forward && !links[p].forward;
}

void validate_trail(const Dag& dag, const Trail& t) {
  if (t.links.empty() || t.nodes.size() != t.links.size() + 1) {
    throw Error(ErrorCode::kMalformedTrail, "a trail needs n+1 nodes for n >= 1 links");
  }
  std::vector<EdgeId> used;
  used.reserve(t.links.size());
  for (std::size_t i = 0; i < t.links.size(); ++i) {
    const TrailLink& link = t.links[i];
    if (link.edge >= dag.edge_count()) {
      throw Error(ErrorCode::kMalformedTrail, "unknown edge id " + std::to_string(link.edge));
    }
    const Edge& e = dag.edge(link.edge);
    NodeId from = link.forward ? e.tail : e.head;
    NodeId to = link.forward ? e.head : e.tail;
    if (from != t.nodes[i] || to != t.nodes[i + 1]) {
      throw Error(ErrorCode::kMalformedTrail, "link " + std::to_string(i) + " does not join its nodes");
    }
    used.push_back(link.edge);
  }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) {
    throw Error(ErrorCode::kMalformedTrail, "trail repeats a link");
  }
}

bool is_active_trail(const Dag& dag, const Trail& t, const NodeSet& conditioning) {
  return is_active_trail(dag, t, descendant_table(dag, conditioning));
}

bool is_active_trail(const Dag& dag, const Trail& t, const DescendantTable& table) {
  validate_trail(dag, t);
  const NodeSet& conditioning = table.conditioning_set();
  if (conditioning.contains(t.nodes.front()) || conditioning.contains(t.nodes.back())) {
    throw Error(ErrorCode::kEndpointInConditioningSet, "trail endpoints must lie outside L");
  }
  for (std::size_t p = 1; p + 1 < t.nodes.size(); ++p) {
    NodeId v = t.nodes[p];
    if (t.head_to_head(p)) {
      if (!table[v]) return false;
    } else if (conditioning.contains(v)) {
      return false;
    }
  }
  return true;
}

}  // namespace dsep
