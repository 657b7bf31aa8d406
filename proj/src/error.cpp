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

#include "dsep/error.hpp"

namespace dsep {
namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     const std::optional<SourceLocation>& where) {
  std::string out;
  if (where) {
    out += "line " + std::to_string(where->line);
    if (where->column > 0) out += ", column " + std::to_string(where->column);
    out += ": ";
  }
  out += std::string(to_string(code));
  out += ": ";
  out += message;
  return out;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kDuplicateName: return "DuplicateName";
    case ErrorCode::kUnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::kInvalidName: return "InvalidName";
    case ErrorCode::kForeignNode: return "ForeignNode";
    case ErrorCode::kEmptyStartSet: return "EmptyStartSet";
    case ErrorCode::kEmptyTargetSet: return "EmptyTargetSet";
    case ErrorCode::kOverlappingSets: return "OverlappingSets";
    case ErrorCode::kNonAdjacentPair: return "NonAdjacentPair";
    case ErrorCode::kMalformedTrail: return "MalformedTrail";
    case ErrorCode::kEndpointInConditioningSet: return "EndpointInConditioningSet";
    case ErrorCode::kOracleScaleExceeded: return "OracleScaleExceeded";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<SourceLocation> where)
    : std::runtime_error(decorate(code, message, where)),
      code_(code),
      where_(where) {}

}  // namespace dsep
