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

#include "dsep/link_graph.hpp"

#include "dsep/error.hpp"

namespace dsep {

LinkGraph::LinkGraph(std::size_t node_count, std::vector<Link> links)
    : node_count_(node_count), links_(std::move(links)) {
  out_offsets_.assign(node_count_ + 1, 0);
  for (const Link& l : links_) {
    if (l.tail.index() >= node_count_ || l.head.index() >= node_count_) {
      throw Error(ErrorCode::kForeignNode, "link endpoint outside graph");
    }
    ++out_offsets_[l.tail.index() + 1];
  }
  for (std::size_t v = 0; v < node_count_; ++v) out_offsets_[v + 1] += out_offsets_[v];
  out_ids_.resize(links_.size());
  std::vector<std::size_t> cursor(out_offsets_.begin(), out_offsets_.end() - 1);
  for (LinkId id = 0; id < links_.size(); ++id) {
    out_ids_[cursor[links_[id].tail.index()]++] = id;
  }
}

}  // namespace dsep
