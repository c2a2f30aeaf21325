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

#include "fdag/error.h"

namespace fdag {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCycleDetected:
      return "CycleDetected";
    case ErrorCode::kInvalidVertex:
      return "InvalidVertex";
    case ErrorCode::kDuplicateArc:
      return "DuplicateArc";
    case ErrorCode::kInvalidAllocation:
      return "InvalidAllocation";
    case ErrorCode::kMissingThreshold:
      return "MissingThreshold";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kWrongAgentCount:
      return "WrongAgentCount";
    case ErrorCode::kWidthTooLarge:
      return "WidthTooLarge";
    case ErrorCode::kTooManyAgents:
      return "TooManyAgents";
    case ErrorCode::kNotOutStars:
      return "NotOutStars";
    case ErrorCode::kNotAForest:
      return "NotAForest";
    case ErrorCode::kStateSpaceExceeded:
      return "StateSpaceExceeded";
    case ErrorCode::kNotAPartition:
      return "NotAPartition";
    case ErrorCode::kNotAllIsModules:
      return "NotAllIsModules";
    case ErrorCode::kInvalidK:
      return "InvalidK";
    case ErrorCode::kImproperColoring:
      return "ImproperColoring";
    case ErrorCode::kUnsolvableWithinBudget:
      return "UnsolvableWithinBudget";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace fdag
