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

#include <string>
#include <string_view>

#include "dsep/dag.hpp"

namespace dsep {

/// Parses the edge-list format:
///
///     # comment
///     node isolated
///     tail -> head
///
/// Node ids follow first appearance. Names are non-empty runs of
/// [A-Za-z0-9_]; the prime is reserved for parameter nodes. Errors carry the
/// line and column of the offending token.
Dag parse_graph(std::string_view text);

/// Same graph as a JSON document: {"nodes": [...], "edges": [["a", "b"], ...]}.
/// "nodes" is optional and only needed for isolated nodes or to fix ids.
Dag parse_graph_json(std::string_view text);

/// Writes every node as a declaration followed by every edge, so parsing the
/// result reproduces ids and edge order.
std::string serialize_graph(const Dag& dag);
std::string serialize_graph_json(const Dag& dag);

/// Reads a file and dispatches on `json`.
Dag load_graph(const std::string& path, bool json);

bool is_valid_node_name(std::string_view name);

}  // namespace dsep
