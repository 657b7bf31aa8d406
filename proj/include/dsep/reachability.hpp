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

#include <concepts>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include "dsep/error.hpp"
#include "dsep/link_graph.hpp"
#include "dsep/node_set.hpp"

namespace dsep {

/// Answers whether link `second` may directly follow link `first`, where
/// head(first) == tail(second).
template <typename F>
concept LegalPairRelation = std::predicate<F&, LinkId, LinkId>;

struct ReachabilityResult {
  static constexpr LinkId kNoLink = std::numeric_limits<LinkId>::max();

  /// Nodes labeled reachable, start nodes included.
  NodeSet reached;
  /// BFS level per link, 0 when never labeled. The virtual links from the
  /// super-source carry level 1, so first hops out of a start node get 2.
  std::vector<std::uint32_t> link_level;
  /// Legal predecessor through which each link was first labeled.
  std::vector<LinkId> predecessor;
  std::uint64_t links_labeled = 0;
  std::uint64_t pairs_examined = 0;
  bool stopped_early = false;
};

struct NeverStop {
  constexpr bool operator()(NodeId) const { return false; }
};

/// Labels every node reachable from `start` by a directed path in which each
/// pair of consecutive links is legal. Each link is labeled at most once and
/// the work queue holds links in discovery order. The first link of a path is
/// always legal. `stop(v)` is consulted whenever a node is newly reached; a
/// true return ends the sweep with `stopped_early` set.
template <LegalPairRelation Legal, typename Stop = NeverStop>
ReachabilityResult find_reachable(const LinkGraph& graph, const NodeSet& start,
                                  Legal&& legal, Stop&& stop = {}) {
  if (start.empty()) throw Error(ErrorCode::kEmptyStartSet, "reachability needs a start node");
  if (start.bound() > graph.node_count()) {
    throw Error(ErrorCode::kForeignNode, "start node not in graph");
  }

  ReachabilityResult result;
  result.link_level.assign(graph.link_count(), 0);
  result.predecessor.assign(graph.link_count(), ReachabilityResult::kNoLink);
  std::vector<char> reached = start.mask(graph.node_count());
  std::deque<LinkId> queue;

  auto label = [&](LinkId id, LinkId pred, std::uint32_t level) {
    result.link_level[id] = level;
    result.predecessor[id] = pred;
    ++result.links_labeled;
    queue.push_back(id);
    NodeId head = graph.link(id).head;
    if (!reached[head.index()]) {
      reached[head.index()] = 1;
      if (stop(head)) {
        result.stopped_early = true;
        return false;
      }
    }
    return true;
  };

  for (NodeId j : start) {
    for (LinkId id : graph.out_links(j)) {
      if (result.link_level[id] != 0) continue;
      if (!label(id, ReachabilityResult::kNoLink, 2)) {
        result.reached = NodeSet::from_mask(reached);
        return result;
      }
    }
  }

  while (!queue.empty()) {
    LinkId current = queue.front();
    queue.pop_front();
    std::uint32_t next_level = result.link_level[current] + 1;
    for (LinkId next : graph.out_links(graph.link(current).head)) {
      if (result.link_level[next] != 0) continue;
      ++result.pairs_examined;
      if (!legal(current, next)) continue;
      if (!label(next, current, next_level)) {
        result.reached = NodeSet::from_mask(reached);
        return result;
      }
    }
  }
  result.reached = NodeSet::from_mask(reached);
  return result;
}

/// Links from a first hop to `link`, following recorded predecessors.
std::vector<LinkId> witness_path(const ReachabilityResult& result, LinkId link);

}  // namespace dsep
