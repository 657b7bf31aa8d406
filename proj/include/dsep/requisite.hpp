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

#include "dsep/dag.hpp"
#include "dsep/separation.hpp"

namespace dsep {

/// The dag with one parameter node v' -> v per original node v. Original
/// nodes keep their ids; the dummy of v is v + base_count.
class AugmentedDag {
 public:
  AugmentedDag(Dag dag, std::size_t base_count) : dag_(std::move(dag)), base_count_(base_count) {}

  const Dag& dag() const { return dag_; }
  std::size_t base_count() const { return base_count_; }

  NodeId dummy_of(NodeId v) const { return NodeId(v.value + static_cast<std::uint32_t>(base_count_)); }
  bool is_dummy(NodeId v) const { return v.index() >= base_count_; }
  NodeId base_of(NodeId dummy) const {
    return NodeId(dummy.value - static_cast<std::uint32_t>(base_count_));
  }

 private:
  Dag dag_;
  std::size_t base_count_;
};

AugmentedDag augment_dummies(const Dag& dag);

/// Nodes whose stored conditional tables can influence P(x_J | x_L): those
/// whose parameter node is d-connected to J given L. Reported as base ids.
NodeSet requisite_parameters(const Dag& dag, const SeparationQuery& q);

/// Nodes outside J ∪ L whose observed value can influence P(x_J | x_L).
NodeSet relevant_variables(const Dag& dag, const SeparationQuery& q);

}  // namespace dsep
