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

#include "dsep/node_set.hpp"

#include <algorithm>
#include <iterator>

namespace dsep {

NodeSet::NodeSet(std::initializer_list<NodeId> ids)
    : NodeSet(std::vector<NodeId>(ids)) {}

NodeSet::NodeSet(std::vector<NodeId> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool NodeSet::contains(NodeId id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

void NodeSet::insert(NodeId id) {
  auto it = std::lower_bound(members_.begin(), members_.end(), id);
  if (it == members_.end() || *it != id) members_.insert(it, id);
}

std::vector<char> NodeSet::mask(std::size_t node_count) const {
  std::vector<char> out(node_count, 0);
  for (NodeId id : members_) {
    if (id.index() < node_count) out[id.index()] = 1;
  }
  return out;
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool NodeSet::intersects(const NodeSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

NodeSet NodeSet::united(const NodeSet& other) const {
  NodeSet out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out.members_));
  return out;
}

NodeSet NodeSet::minus(const NodeSet& other) const {
  NodeSet out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out.members_));
  return out;
}

}  // namespace dsep
