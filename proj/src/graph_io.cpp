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

#include "dsep/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "dsep/error.hpp"

namespace dsep {
namespace {

bool name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::string check_name(std::string_view name) {
  if (name.empty()) return "missing node name";
  if (name.find('\'') != std::string_view::npos) {
    return "'" + std::string(name) + "': the prime character is reserved for parameter nodes";
  }
  if (!std::all_of(name.begin(), name.end(), name_char)) {
    return "'" + std::string(name) + "' is not a valid node name";
  }
  return {};
}

// Collects nodes and edges, tracking where each edge was declared so that
// structural errors found later can point back into the source.
class GraphBuilder {
 public:
  NodeId node(const std::string& name) {
    auto [it, fresh] = index_.emplace(name, NodeId(static_cast<std::uint32_t>(names_.size())));
    if (fresh) names_.push_back(name);
    return it->second;
  }

  void edge(const std::string& tail, const std::string& head, std::optional<SourceLocation> where) {
    NodeId t = node(tail);
    NodeId h = node(head);
    if (t == h) throw Error(ErrorCode::kSelfLoop, "self-loop on " + tail, where);
    std::uint64_t key = (static_cast<std::uint64_t>(t.value) << 32) | h.value;
    if (!seen_.insert(key).second) {
      throw Error(ErrorCode::kDuplicateEdge, "edge " + tail + " -> " + head + " given twice", where);
    }
    edges_.push_back({t, h});
    where_.push_back(where);
  }

  Dag finish() {
    std::vector<NodeId> cycle = find_cycle(names_.size(), edges_);
    if (!cycle.empty()) {
      std::string witness;
      for (NodeId v : cycle) witness += names_[v.index()] + " -> ";
      witness += names_[cycle.front().index()];
      // Point at the last-declared edge on the cycle.
      std::optional<SourceLocation> where;
      std::size_t latest = 0;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        Edge e{cycle[i], cycle[(i + 1) % cycle.size()]};
        auto it = std::find(edges_.begin(), edges_.end(), e);
        auto pos = static_cast<std::size_t>(it - edges_.begin());
        if (it != edges_.end() && pos >= latest) {
          latest = pos;
          where = where_[pos];
        }
      }
      throw Error(ErrorCode::kCycleDetected, "cycle " + witness, where);
    }
    std::size_t n = names_.size();
    return Dag::from_edges(n, std::move(edges_), std::move(names_));
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
  std::vector<std::optional<SourceLocation>> where_;
  std::unordered_set<std::uint64_t> seen_;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Trimmed token with its 1-based column in the line.
struct Token {
  std::string_view text;
  std::size_t column;
};

Token trim(std::string_view line, std::size_t begin, std::size_t end) {
  while (begin < end && is_space(line[begin])) ++begin;
  while (end > begin && is_space(line[end - 1])) --end;
  return {line.substr(begin, end - begin), begin + 1};
}

std::string require_name(const Token& tok, std::size_t line_no) {
  std::string problem = check_name(tok.text);
  if (!problem.empty()) throw Error(ErrorCode::kSyntaxError, problem, SourceLocation{line_no, tok.column});
  return std::string(tok.text);
}

}  // namespace

bool is_valid_node_name(std::string_view name) { return check_name(name).empty(); }

Dag parse_graph(std::string_view text) {
  GraphBuilder builder;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    ++line_no;
    start = stop + 1;

    std::size_t end = std::min(line.find('#'), line.size());
    Token whole = trim(line, 0, end);
    if (whole.text.empty()) continue;

    std::size_t arrow = line.substr(0, end).find("->");
    if (arrow != std::string_view::npos) {
      Token tail = trim(line, 0, arrow);
      Token head = trim(line, arrow + 2, end);
      if (head.text.find("->") != std::string_view::npos) {
        throw Error(ErrorCode::kSyntaxError, "one edge per line", SourceLocation{line_no, head.column});
      }
      std::string t = require_name(tail, line_no);
      std::string h = require_name(head, line_no);
      builder.edge(t, h, SourceLocation{line_no, tail.column});
      continue;
    }
    constexpr std::string_view kKeyword = "node";
    std::string_view body = whole.text;
    if (body.substr(0, kKeyword.size()) == kKeyword && body.size() > kKeyword.size() &&
        is_space(body[kKeyword.size()])) {
      std::size_t offset = whole.column - 1 + kKeyword.size();
      Token name = trim(line, offset, end);
      if (std::any_of(name.text.begin(), name.text.end(), is_space)) {
        throw Error(ErrorCode::kSyntaxError, "one node per declaration", SourceLocation{line_no, name.column});
      }
      builder.node(require_name(name, line_no));
      continue;
    }
    throw Error(ErrorCode::kSyntaxError, "expected 'tail -> head' or 'node NAME'",
                SourceLocation{line_no, whole.column});
  }
  return builder.finish();
}

Dag parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSyntaxError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kSyntaxError, "top level must be an object");

  auto name_of = [](const nlohmann::json& v) {
    if (!v.is_string()) throw Error(ErrorCode::kSyntaxError, "node names must be strings");
    std::string name = v.get<std::string>();
    std::string problem = check_name(name);
    if (!problem.empty()) throw Error(ErrorCode::kSyntaxError, problem);
    return name;
  };

  GraphBuilder builder;
  if (doc.contains("nodes")) {
    if (!doc["nodes"].is_array()) throw Error(ErrorCode::kSyntaxError, "\"nodes\" must be an array");
    for (const auto& v : doc["nodes"]) builder.node(name_of(v));
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw Error(ErrorCode::kSyntaxError, "\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::kSyntaxError, "each edge must be a [tail, head] pair");
      }
      builder.edge(name_of(e[0]), name_of(e[1]), std::nullopt);
    }
  }
  return builder.finish();
}

std::string serialize_graph(const Dag& dag) {
  std::ostringstream out;
  for (std::uint32_t v = 0; v < dag.node_count(); ++v) out << "node " << dag.name(NodeId(v)) << "\n";
  for (const Edge& e : dag.edges()) out << dag.name(e.tail) << " -> " << dag.name(e.head) << "\n";
  return out.str();
}

std::string serialize_graph_json(const Dag& dag) {
  nlohmann::json doc;
  doc["nodes"] = nlohmann::json::array();
  doc["edges"] = nlohmann::json::array();
  for (std::uint32_t v = 0; v < dag.node_count(); ++v) doc["nodes"].push_back(dag.name(NodeId(v)));
  for (const Edge& e : dag.edges()) doc["edges"].push_back({dag.name(e.tail), dag.name(e.head)});
  return doc.dump(2) + "\n";
}

Dag load_graph(const std::string& path, bool json) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  return json ? parse_graph_json(text) : parse_graph(text);
}

}  // namespace dsep
