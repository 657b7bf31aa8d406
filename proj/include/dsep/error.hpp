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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dsep {

enum class ErrorCode {
  kCycleDetected,
  kSelfLoop,
  kDuplicateEdge,
  kDuplicateName,
  kUnknownEndpoint,
  kInvalidName,
  kForeignNode,
  kEmptyStartSet,
  kEmptyTargetSet,
  kOverlappingSets,
  kNonAdjacentPair,
  kMalformedTrail,
  kEndpointInConditioningSet,
  kOracleScaleExceeded,
  kInvalidArgument,
  kSyntaxError,
};

std::string_view to_string(ErrorCode code);

/// Position inside a graph document, 1-based.
struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// The single exception type thrown by the library. `code()` identifies the
/// failure class; parse failures additionally carry a source location.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<SourceLocation> where = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<SourceLocation>& where() const noexcept { return where_; }

 private:
  ErrorCode code_;
  std::optional<SourceLocation> where_;
};

}  // namespace dsep
