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

#ifndef GUT_ERROR_H_
#define GUT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gut {

enum class ErrorCode {
  kNonConvergence,
  kDimensionMismatch,
  kLengthMismatch,
  kEmptyTeam,
  kBuilderFailure,
  kCapExceeded,
  kDomainError,
  kUnknownAgent,
  kEmptyGroup,
  kNoPath,
  kEmptyInput,
  kInvalidArgument,
  kConfigError,
  kTrialFailure,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this type; callers dispatch on
// code() when they need to distinguish them.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gut

#endif  // GUT_ERROR_H_
