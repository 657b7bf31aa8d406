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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dsep/link_graph.hpp"
#include "dsep/node_set.hpp"

namespace dsep {

using EdgeId = std::uint32_t;

struct Edge {
  NodeId tail;
  NodeId head;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable directed acyclic graph with in-lists and out-lists.
///
/// Construction validates eagerly: self-loops, duplicate edges and cycles are
/// rejected, so every algorithm downstream may assume a simple dag. Node ids
/// follow the order in which nodes were supplied.
class Dag {
 public:
  Dag() = default;

  /// Validates and builds. `names` may be empty, in which case node `i` is
  /// displayed as its decimal index.
  static Dag from_edges(std::size_t node_count, std::vector<Edge> edges,
                        std::vector<std::string> names = {});

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId id) const { return edges_[id]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const EdgeId> out_edges(NodeId v) const {
    return {out_ids_.data() + out_offsets_[v.index()],
            out_ids_.data() + out_offsets_[v.index() + 1]};
  }
  std::span<const EdgeId> in_edges(NodeId v) const {
    return {in_ids_.data() + in_offsets_[v.index()],
            in_ids_.data() + in_offsets_[v.index() + 1]};
  }

  /// Neighbour ids in the same order as out_edges() / in_edges().
  std::span<const NodeId> children_view(NodeId v) const {
    return {adjacency_.data() + adjacency_index_[2 * v.index()],
            adjacency_.data() + adjacency_index_[2 * v.index() + 1]};
  }
  std::span<const NodeId> parents_view(NodeId v) const {
    return {adjacency_.data() + adjacency_index_[2 * v.index() + 1],
            adjacency_.data() + adjacency_index_[2 * v.index() + 2]};
  }

  std::vector<NodeId> parents(NodeId v) const;
  std::vector<NodeId> children(NodeId v) const;

  std::optional<EdgeId> find_edge(NodeId tail, NodeId head) const;
  bool contains(NodeId v) const { return v.index() < node_count_; }

  std::string name(NodeId v) const;
  std::optional<NodeId> find(std::string_view name) const;
  bool has_names() const { return !names_.empty(); }

  /// Kahn order, ties broken by ascending id.
  const std::vector<NodeId>& topological_order() const { return topo_; }

  /// Same nodes and names, every edge flipped.
  Dag reversed() const;

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<EdgeId> out_ids_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<EdgeId> in_ids_;
  // Children then parents of each node, back to back; node v owns
  // adjacency_[adjacency_index_[2v] .. adjacency_index_[2v + 2]).
  std::vector<NodeId> adjacency_;
  std::vector<std::size_t> adjacency_index_;
  std::vector<NodeId> topo_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> name_index_;
};

/// Builds a dag from external names. Ids are assigned in `node_names` order.
Dag build_dag(std::span<const std::string> node_names,
              std::span<const std::pair<std::string, std::string>> edges);

/// Returns a directed cycle (first node repeated implicitly) if one exists,
/// otherwise an empty vector. Self-loops count as cycles of length one.
std::vector<NodeId> find_cycle(std::size_t node_count, std::span<const Edge> edges);

/// Throws ForeignNode unless every member of `s` belongs to `dag`.
void check_members(const Dag& dag, const NodeSet& s, std::string_view what);

/// flags[v] is true iff v is in L or has a descendant in L.
class DescendantTable {
 public:
  DescendantTable(std::vector<char> flags, NodeSet conditioning_set)
      : flags_(std::move(flags)), conditioning_set_(std::move(conditioning_set)) {}

  bool operator[](NodeId v) const { return flags_[v.index()] != 0; }
  std::size_t size() const { return flags_.size(); }
  const NodeSet& conditioning_set() const { return conditioning_set_; }

 private:
  std::vector<char> flags_;
  NodeSet conditioning_set_;
};

/// Reverse traversal from L along in-lists; O(|V| + |E|).
DescendantTable descendant_table(const Dag& dag, const NodeSet& conditioning);

/// S together with every ancestor of a node of S.
NodeSet ancestral_set(const Dag& dag, const NodeSet& s);

enum class Orientation : std::uint8_t { kOriginal, kReversed };

/// The dag with every edge present in both directions. Link 2e is edge e as
/// stored; link 2e+1 is its reversal.
class DoubledGraph {
 public:
  explicit DoubledGraph(const Dag& base);

  const Dag& base() const { return *base_; }
  const LinkGraph& graph() const { return graph_; }
  std::size_t link_count() const { return graph_.link_count(); }

  static constexpr LinkId original_link(EdgeId e) { return 2 * e; }
  static constexpr LinkId reversed_link(EdgeId e) { return 2 * e + 1; }
  static constexpr EdgeId base_edge(LinkId l) { return l / 2; }
  static constexpr Orientation orientation(LinkId l) {
    return (l & 1U) ? Orientation::kReversed : Orientation::kOriginal;
  }

 private:
  const Dag* base_;
  LinkGraph graph_;
};

DoubledGraph doubled_graph(const Dag& dag);

}  // namespace dsep
