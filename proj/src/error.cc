// Copyright 2026 The GUT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gut/error.h"

namespace gut {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonConvergence: return "NonConvergence";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyTeam: return "EmptyTeam";
    case ErrorCode::kBuilderFailure: return "BuilderFailure";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kUnknownAgent: return "UnknownAgent";
    case ErrorCode::kEmptyGroup: return "EmptyGroup";
    case ErrorCode::kNoPath: return "NoPath";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kTrialFailure: return "TrialFailure";
  }
  return "Unknown";
}

}  // namespace gut
