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
#include <string>
#include <string_view>
#include <vector>

namespace dsep {

enum class BenchFamily { kChain, kStar, kRandomSparse };

BenchFamily parse_bench_family(std::string_view name);
std::string_view to_string(BenchFamily family);

struct BenchRow {
  std::string family;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  /// "fast", "faithful" or "moral".
  std::string algorithm;
  /// Best of the repeats, in milliseconds.
  double time_ms = 0.0;
  /// d-separated set size, or 1/0 for the moral statement verdict.
  std::size_t result_size = 0;
  /// Machine-independent work counter: adjacency entries scanned (fast),
  /// links labeled (faithful), moral edges (moral).
  std::uint64_t operations = 0;
};

struct BenchOptions {
  BenchFamily family = BenchFamily::kChain;
  /// Target edge counts, ascending.
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 20240601;
  int repeats = 3;
  bool include_faithful = true;
  bool include_moral = true;
};

/// One query per instance: J is a fixed source node, L a deterministic sparse
/// sample (empty for chain and star), and the moral check targets a fixed
/// far node.
std::vector<BenchRow> run_bench(const BenchOptions& options);

std::string format_bench(const std::vector<BenchRow>& rows);

}  // namespace dsep
