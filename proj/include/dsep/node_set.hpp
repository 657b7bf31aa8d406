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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace dsep {

/// Dense node index. Valid ids of a graph are 0 .. node_count-1.
struct NodeId {
  std::uint32_t value = 0;

  constexpr NodeId() = default;
  constexpr explicit NodeId(std::uint32_t v) : value(v) {}

  constexpr std::size_t index() const { return value; }
  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

/// Ordered set of node ids. Members are kept sorted and unique so that
/// iteration order (and everything printed from it) is deterministic.
class NodeSet {
 public:
  using const_iterator = std::vector<NodeId>::const_iterator;

  NodeSet() = default;
  NodeSet(std::initializer_list<NodeId> ids);
  explicit NodeSet(std::vector<NodeId> ids);

  /// Builds a set from a membership mask; mask[i] != 0 selects NodeId(i).
  template <typename Mask>
  static NodeSet from_mask(const Mask& mask) {
    NodeSet out;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i]) out.members_.push_back(NodeId(static_cast<std::uint32_t>(i)));
    }
    return out;
  }

  bool contains(NodeId id) const;
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  const std::vector<NodeId>& members() const { return members_; }

  void insert(NodeId id);

  /// Membership mask over `node_count` nodes.
  std::vector<char> mask(std::size_t node_count) const;

  /// Largest id + 1, or 0 when empty.
  std::size_t bound() const { return members_.empty() ? 0 : members_.back().index() + 1; }

  bool is_subset_of(const NodeSet& other) const;
  bool intersects(const NodeSet& other) const;
  NodeSet united(const NodeSet& other) const;
  NodeSet minus(const NodeSet& other) const;

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeId> members_;
};

}  // namespace dsep

template <>
struct std::hash<dsep::NodeId> {
  std::size_t operator()(dsep::NodeId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
