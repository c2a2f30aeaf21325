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

// Exhaustive ground truth for small instances. Every answer is exact;
// searches that would exceed the node budget fail loudly instead of
// returning a guess.

#ifndef FDAG_ORACLE_H_
#define FDAG_ORACLE_H_

#include <cstdint>
#include <optional>

#include "fdag/model.h"

namespace fdag {

struct OracleOptions {
  std::uint64_t node_budget = 100'000'000;
};

// Requires n <= 64. Throws kBudgetExceeded when the search tree is larger
// than the budget.
SolveResult BruteForceOptimum(const Instance& inst,
                              const OracleOptions& options = {});

struct DecisionWitness {
  bool feasible = false;
  std::optional<Allocation> witness;
};

// Throws kMissingThreshold, kBudgetExceeded.
DecisionWitness BruteForceDecision(const Instance& inst,
                                   const OracleOptions& options = {});

}  // namespace fdag

#endif  // FDAG_ORACLE_H_
