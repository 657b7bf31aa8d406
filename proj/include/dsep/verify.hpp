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
#include <vector>

#include "dsep/dag.hpp"

namespace dsep {

struct AgreementOptions {
  /// Up to this many nodes every L ⊆ V∖{j} is tried for every j; beyond it
  /// `sampled_queries` random (j, L) pairs are drawn.
  std::size_t exhaustive_max_nodes = 10;
  std::size_t sampled_queries = 512;
  std::uint64_t seed = 1;
};

/// Cross-check of every separation route on one graph. Each counter tallies
/// comparisons; a nonzero `*_disagreements` is a bug.
struct AgreementReport {
  std::size_t graphs = 0;
  std::size_t queries = 0;
  std::size_t statements = 0;
  std::size_t oracle_skipped = 0;
  /// dsep_set vs dsep_set_fast vs the trail oracle.
  std::size_t set_disagreements = 0;
  /// is_dseparated vs moral_check, and vs membership in dsep_set.
  std::size_t moral_disagreements = 0;
  /// is_dseparated with and without early termination, both engines.
  std::size_t early_stop_disagreements = 0;
  /// Restricted vs full marriage.
  std::size_t marriage_disagreements = 0;
  std::vector<std::string> witnesses;

  std::size_t total_disagreements() const {
    return set_disagreements + moral_disagreements + early_stop_disagreements +
           marriage_disagreements;
  }
  AgreementReport& operator+=(const AgreementReport& other);
  std::string summary() const;
};

/// Runs every singleton-J query against the faithful engine, the fast
/// engine, the trail oracle (when within scale) and, for each derived
/// statement, the moral-graph check under both marriage rules.
AgreementReport check_agreement(const Dag& dag, const AgreementOptions& options = {});

}  // namespace dsep
