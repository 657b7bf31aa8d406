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
#include <span>
#include <vector>

#include "dsep/node_set.hpp"

namespace dsep {

using LinkId = std::uint32_t;

struct Link {
  NodeId tail;
  NodeId head;
};

/// A general finite directed graph addressed by link id. Cycles and
/// antiparallel links are allowed; this is the input shape of the
/// forbidden-pair reachability search.
class LinkGraph {
 public:
  LinkGraph() = default;
  LinkGraph(std::size_t node_count, std::vector<Link> links);

  std::size_t node_count() const { return node_count_; }
  std::size_t link_count() const { return links_.size(); }
  const Link& link(LinkId id) const { return links_[id]; }
  std::span<const Link> links() const { return links_; }

  /// Links leaving `v`, in ascending link id order.
  std::span<const LinkId> out_links(NodeId v) const {
    return {out_ids_.data() + out_offsets_[v.index()],
            out_ids_.data() + out_offsets_[v.index() + 1]};
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<Link> links_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<LinkId> out_ids_;
};

}  // namespace dsep
