// Copyright 2026 The fdag Authors
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

#ifndef FDAG_ERROR_H_
#define FDAG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fdag {

enum class ErrorCode {
  kCycleDetected,
  kInvalidVertex,
  kDuplicateArc,
  kInvalidAllocation,
  kMissingThreshold,
  kBudgetExceeded,
  kWrongAgentCount,
  kWidthTooLarge,
  kTooManyAgents,
  kNotOutStars,
  kNotAForest,
  kStateSpaceExceeded,
  kNotAPartition,
  kNotAllIsModules,
  kInvalidK,
  kImproperColoring,
  kUnsolvableWithinBudget,
  kParseError,
  kInvalidArgument,
};

// Stable machine-readable name, e.g. "CycleDetected".
std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported by throwing Error. `witness` carries
// auxiliary vertex data where one exists (the cycle for kCycleDetected).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<int> witness = {})
      : std::runtime_error(message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::vector<int> witness_;
};

}  // namespace fdag

#endif  // FDAG_ERROR_H_
