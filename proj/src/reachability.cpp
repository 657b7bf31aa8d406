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

#include "dsep/reachability.hpp"

#include <algorithm>

namespace dsep {

std::vector<LinkId> witness_path(const ReachabilityResult& result, LinkId link) {
  if (link >= result.link_level.size() || result.link_level[link] == 0) {
    throw Error(ErrorCode::kInvalidArgument, "link was never labeled");
  }
  std::vector<LinkId> path;
  for (LinkId at = link; at != ReachabilityResult::kNoLink; at = result.predecessor[at]) {
    path.push_back(at);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace dsep
