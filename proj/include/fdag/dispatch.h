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

// Picks the most specific applicable solver for an instance and records
// why the others were skipped.

#ifndef FDAG_DISPATCH_H_
#define FDAG_DISPATCH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "fdag/dag.h"
#include "fdag/model.h"

namespace fdag {

struct SolverBudgets {
  std::uint64_t oracle_budget = 100'000'000;
  std::uint64_t guess_budget = 10'000'000;
  int dp_k_cap = 4;
  std::size_t dp_max_profiles = 4'000'000;
};

enum class SolverId {
  kTooManyAgents,  // k > n: canonical answer n
  kSingleAgent,
  kTwoAgents,
  kOutStars,
  kWidthTwo,
  kOutForest,
  kIsModules,
  kModularFpt,
  kOracle,
};

std::string SolverName(SolverId id);

struct DispatchReport {
  ShapeTags tags;
  std::string chosen;
  std::vector<std::string> considered;  // "<solver>: <reason skipped>"
  std::vector<std::string> notes;

  std::string Render() const;
};

struct Dispatched {
  SolveResult result;
  DispatchReport report;
};

// Routing order: k > n, k = 1, k = 2, out-stars, width <= 2, out-forest,
// independent-set modules, path/independent-set modules, oracle. A solver
// that runs out of budget hands over to the next candidate. The returned
// allocation is re-verified against the claimed optimum.
// Throws kUnsolvableWithinBudget with the rendered report.
Dispatched DispatchSolve(const Instance& inst,
                         const SolverBudgets& budgets = {});

// Specialised solvers whose preconditions hold (oracle excluded).
std::vector<SolverId> ApplicableSolvers(const Instance& inst,
                                        const SolverBudgets& budgets = {});

SolveResult RunSolver(SolverId id, const Instance& inst,
                      const SolverBudgets& budgets = {});

}  // namespace fdag

#endif  // FDAG_DISPATCH_H_
