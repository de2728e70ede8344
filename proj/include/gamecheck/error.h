// Copyright 2026 The gamecheck Authors
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

#ifndef GAMECHECK_ERROR_H_
#define GAMECHECK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gamecheck {

enum class ErrorCode {
  kShapeMismatch,
  kNonPositiveWeight,
  kNonFiniteEntry,
  kIndexOutOfRange,
  kMalformedJson,
  kSchemaViolation,
  kDuplicateAxis,
  kInvalidTolerance,
  kWrongPlayerCount,
  kNonUniformWeights,
  kNotAPotentialGame,
  kNotZeroSumEquivalent,
  kStencilOutOfBox,
  kBoxNotPositive,
  kInvalidParameter,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. The code is the
// stable, machine-checkable part; the message is for humans.
class GameError : public std::runtime_error {
 public:
  GameError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::kNonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kMalformedJson: return "MalformedJson";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kDuplicateAxis: return "DuplicateAxis";
    case ErrorCode::kInvalidTolerance: return "InvalidTolerance";
    case ErrorCode::kWrongPlayerCount: return "WrongPlayerCount";
    case ErrorCode::kNonUniformWeights: return "NonUniformWeights";
    case ErrorCode::kNotAPotentialGame: return "NotAPotentialGame";
    case ErrorCode::kNotZeroSumEquivalent: return "NotZeroSumEquivalent";
    case ErrorCode::kStencilOutOfBox: return "StencilOutOfBox";
    case ErrorCode::kBoxNotPositive: return "BoxNotPositive";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
  }
  return "Unknown";
}

}  // namespace gamecheck

#endif  // GAMECHECK_ERROR_H_
