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

#include <algorithm>
#include <deque>
#include <queue>

#include "dsep/error.hpp"

namespace dsep {
namespace {

void build_csr(std::size_t node_count, std::span<const Edge> edges, bool by_tail,
               std::vector<std::size_t>& offsets, std::vector<EdgeId>& ids) {
  offsets.assign(node_count + 1, 0);
  for (const Edge& e : edges) ++offsets[(by_tail ? e.tail : e.head).index() + 1];
  for (std::size_t v = 0; v < node_count; ++v) offsets[v + 1] += offsets[v];
  ids.resize(edges.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    ids[cursor[(by_tail ? e.tail : e.head).index()]++] = id;
  }
}

std::uint64_t edge_key(const Edge& e) {
  return (static_cast<std::uint64_t>(e.tail.value) << 32) | e.head.value;
}

}  // namespace

std::vector<NodeId> find_cycle(std::size_t node_count, std::span<const Edge> edges) {
  std::vector<std::size_t> indegree(node_count, 0);
  std::vector<std::vector<EdgeId>> out(node_count);
  std::vector<std::vector<EdgeId>> in(node_count);
  for (EdgeId id = 0; id < edges.size(); ++id) {
    ++indegree[edges[id].head.index()];
    out[edges[id].tail.index()].push_back(id);
    in[edges[id].head.index()].push_back(id);
  }
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < node_count; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::vector<char> removed(node_count, 0);
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop_front();
    removed[v] = 1;
    for (EdgeId id : out[v]) {
      if (--indegree[edges[id].head.index()] == 0) ready.push_back(edges[id].head.index());
    }
  }
  auto start = std::find(removed.begin(), removed.end(), 0);
  if (start == removed.end()) return {};

  // Every surviving node keeps a surviving predecessor; walk backwards until
  // a node repeats.
  std::vector<std::size_t> seen_at(node_count, SIZE_MAX);
  std::vector<NodeId> walk;
  std::size_t v = static_cast<std::size_t>(start - removed.begin());
  while (seen_at[v] == SIZE_MAX) {
    seen_at[v] = walk.size();
    walk.push_back(NodeId(static_cast<std::uint32_t>(v)));
    for (EdgeId id : in[v]) {
      if (!removed[edges[id].tail.index()]) {
        v = edges[id].tail.index();
        break;
      }
    }
  }
  std::vector<NodeId> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[v]), walk.end());
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

Dag Dag::from_edges(std::size_t node_count, std::vector<Edge> edges,
                    std::vector<std::string> names) {
  if (node_count > UINT32_MAX || edges.size() > UINT32_MAX / 2) {
    throw Error(ErrorCode::kInvalidArgument, "graph too large for 32-bit ids");
  }
  if (!names.empty() && names.size() != node_count) {
    throw Error(ErrorCode::kInvalidArgument, "name table size does not match node count");
  }
  Dag dag;
  dag.node_count_ = node_count;
  dag.names_ = std::move(names);
  for (std::size_t i = 0; i < dag.names_.size(); ++i) {
    auto [it, fresh] = dag.name_index_.emplace(dag.names_[i], NodeId(static_cast<std::uint32_t>(i)));
    if (!fresh) throw Error(ErrorCode::kDuplicateName, "node '" + dag.names_[i] + "' declared twice");
  }
  for (const Edge& e : edges) {
    if (!dag.contains(e.tail) || !dag.contains(e.head)) {
      throw Error(ErrorCode::kUnknownEndpoint, "edge endpoint outside node range");
    }
    if (e.tail == e.head) {
      throw Error(ErrorCode::kSelfLoop, "self-loop on " + dag.name(e.tail));
    }
  }
  {
    std::vector<std::uint64_t> keys;
    keys.reserve(edges.size());
    for (const Edge& e : edges) keys.push_back(edge_key(e));
    std::sort(keys.begin(), keys.end());
    auto dup = std::adjacent_find(keys.begin(), keys.end());
    if (dup != keys.end()) {
      NodeId t(static_cast<std::uint32_t>(*dup >> 32));
      NodeId h(static_cast<std::uint32_t>(*dup & 0xffffffffU));
      throw Error(ErrorCode::kDuplicateEdge,
                  "edge " + dag.name(t) + " -> " + dag.name(h) + " given twice");
    }
  }
  dag.edges_ = std::move(edges);
  build_csr(node_count, dag.edges_, true, dag.out_offsets_, dag.out_ids_);
  build_csr(node_count, dag.edges_, false, dag.in_offsets_, dag.in_ids_);
  dag.adjacency_.reserve(2 * dag.edges_.size());
  dag.adjacency_index_.reserve(2 * node_count + 1);
  for (std::size_t v = 0; v < node_count; ++v) {
    dag.adjacency_index_.push_back(dag.adjacency_.size());
    for (std::size_t i = dag.out_offsets_[v]; i < dag.out_offsets_[v + 1]; ++i) {
      dag.adjacency_.push_back(dag.edges_[dag.out_ids_[i]].head);
    }
    dag.adjacency_index_.push_back(dag.adjacency_.size());
    for (std::size_t i = dag.in_offsets_[v]; i < dag.in_offsets_[v + 1]; ++i) {
      dag.adjacency_.push_back(dag.edges_[dag.in_ids_[i]].tail);
    }
  }
  dag.adjacency_index_.push_back(dag.adjacency_.size());

  // Kahn's algorithm with a min-heap so the order is a function of the ids.
  std::vector<std::size_t> indegree(node_count);
  for (std::size_t v = 0; v < node_count; ++v) {
    indegree[v] = dag.in_offsets_[v + 1] - dag.in_offsets_[v];
  }
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < node_count; ++v) {
    if (indegree[v] == 0) ready.push(static_cast<std::uint32_t>(v));
  }
  dag.topo_.reserve(node_count);
  while (!ready.empty()) {
    NodeId v(ready.top());
    ready.pop();
    dag.topo_.push_back(v);
    for (EdgeId id : dag.out_edges(v)) {
      NodeId w = dag.edges_[id].head;
      if (--indegree[w.index()] == 0) ready.push(w.value);
    }
  }
  if (dag.topo_.size() != node_count) {
    std::vector<NodeId> cycle = find_cycle(node_count, dag.edges_);
    std::string witness;
    for (NodeId v : cycle) witness += dag.name(v) + " -> ";
    if (!cycle.empty()) witness += dag.name(cycle.front());
    throw Error(ErrorCode::kCycleDetected, "cycle " + witness);
  }
  return dag;
}

std::vector<NodeId> Dag::parents(NodeId v) const {
  std::span<const NodeId> view = parents_view(v);
  return {view.begin(), view.end()};
}

std::vector<NodeId> Dag::children(NodeId v) const {
  std::span<const NodeId> view = children_view(v);
  return {view.begin(), view.end()};
}

std::optional<EdgeId> Dag::find_edge(NodeId tail, NodeId head) const {
  if (!contains(tail) || !contains(head)) return std::nullopt;
  for (EdgeId id : out_edges(tail)) {
    if (edges_[id].head == head) return id;
  }
  return std::nullopt;
}

std::string Dag::name(NodeId v) const {
  if (v.index() < names_.size()) return names_[v.index()];
  return std::to_string(v.value);
}

std::optional<NodeId> Dag::find(std::string_view name) const {
  if (names_.empty()) {
    std::uint64_t value = 0;
    if (name.empty() || name.size() > 10) return std::nullopt;
    for (char c : name) {
      if (c < '0' || c > '9') return std::nullopt;
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (value >= node_count_) return std::nullopt;
    return NodeId(static_cast<std::uint32_t>(value));
  }
  auto it = name_index_.find(std::string(name));
  if (it == name_index_.end()) return std::nullopt;
  return it->second;
}

Dag Dag::reversed() const {
  std::vector<Edge> flipped;
  flipped.reserve(edges_.size());
  for (const Edge& e : edges_) flipped.push_back({e.head, e.tail});
  return from_edges(node_count_, std::move(flipped), names_);
}

Dag build_dag(std::span<const std::string> node_names,
              std::span<const std::pair<std::string, std::string>> edges) {
  std::unordered_map<std::string, NodeId> index;
  for (std::size_t i = 0; i < node_names.size(); ++i) {
    if (!index.emplace(node_names[i], NodeId(static_cast<std::uint32_t>(i))).second) {
      throw Error(ErrorCode::kDuplicateName, "node '" + node_names[i] + "' declared twice");
    }
  }
  std::vector<Edge> resolved;
  resolved.reserve(edges.size());
  for (const auto& [tail, head] : edges) {
    auto t = index.find(tail);
    auto h = index.find(head);
    if (t == index.end() || h == index.end()) {
      throw Error(ErrorCode::kUnknownEndpoint,
                  "edge " + tail + " -> " + head + " names an undeclared node");
    }
    resolved.push_back({t->second, h->second});
  }
  return Dag::from_edges(node_names.size(), std::move(resolved),
                         std::vector<std::string>(node_names.begin(), node_names.end()));
}

void check_members(const Dag& dag, const NodeSet& s, std::string_view what) {
  if (s.bound() > dag.node_count()) {
    throw Error(ErrorCode::kForeignNode,
                std::string(what) + " references node " +
                    std::to_string(s.members().back().value) + " not in the graph");
  }
}

DescendantTable descendant_table(const Dag& dag, const NodeSet& conditioning) {
  check_members(dag, conditioning, "conditioning set");
  std::vector<char> flags = conditioning.mask(dag.node_count());
  std::vector<NodeId> stack(conditioning.begin(), conditioning.end());
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId parent : dag.parents_view(v)) {
      if (!flags[parent.index()]) {
        flags[parent.index()] = 1;
        stack.push_back(parent);
      }
    }
  }
  return DescendantTable(std::move(flags), conditioning);
}

NodeSet ancestral_set(const Dag& dag, const NodeSet& s) {
  check_members(dag, s, "node set");
  std::vector<char> mark = s.mask(dag.node_count());
  std::vector<NodeId> stack(s.begin(), s.end());
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (EdgeId id : dag.in_edges(v)) {
      NodeId parent = dag.edge(id).tail;
      if (!mark[parent.index()]) {
        mark[parent.index()] = 1;
        stack.push_back(parent);
      }
    }
  }
  return NodeSet::from_mask(mark);
}

namespace {

std::vector<Link> doubled_links(const Dag& dag) {
  std::vector<Link> links;
  links.reserve(2 * dag.edge_count());
  for (const Edge& e : dag.edges()) {
    links.push_back({e.tail, e.head});
    links.push_back({e.head, e.tail});
  }
  return links;
}

}  // namespace

DoubledGraph::DoubledGraph(const Dag& base)
    : base_(&base), graph_(base.node_count(), doubled_links(base)) {}

DoubledGraph doubled_graph(const Dag& dag) { return DoubledGraph(dag); }

}  // namespace dsep
