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

// Partitions into path modules and independent-set modules, and the two
// fixed-parameter solvers built on them: guessing agent patterns per
// module with a flow completion, and an integer feasibility model over
// assignable module families.

#ifndef FDAG_MODULAR_H_
#define FDAG_MODULAR_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdag/dag.h"
#include "fdag/model.h"

namespace fdag {

enum class ModuleKind { kPath, kIndependentSet };

struct Module {
  ModuleKind kind;
  // Path modules list their vertices from the top of the path down;
  // independent-set modules are ascending.
  std::vector<Vertex> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
};

struct ModularPartition {
  std::vector<Module> modules;

  int size() const { return static_cast<int>(modules.size()); }
  int path_count() const;
  // True when every module is an independent set or a singleton.
  bool all_independent() const;
  std::string Summary() const;
};

// Every vertex outside `x` sees all of `x` the same way.
bool IsModule(const PreferenceGraph& g, std::span<const Vertex> x);
bool InducesIndependentSet(const PreferenceGraph& g, std::span<const Vertex> x);
// Returns the vertices in path order when G[x] is exactly a directed path.
std::optional<std::vector<Vertex>> InducedPathOrder(const PreferenceGraph& g,
                                                    std::span<const Vertex> x);

// A minimum partition into path and independent-set modules, read off the
// modular decomposition tree. Singletons are tagged kPath. Within a run of
// consecutive singleton children of a linear node the pairing starts at the
// top, which fixes the choice where several minimum partitions exist.
ModularPartition ComputeModularPartition(const PreferenceGraph& g);

struct FptOptions {
  std::uint64_t guess_budget = 10'000'000;
};

// Number of guesses SolveModularFpt would enumerate, after symmetry
// reduction. Saturates at UINT64_MAX.
std::uint64_t CountModularGuesses(const Instance& inst,
                                  const ModularPartition& mp);

// Throws kBudgetExceeded.
SolveResult SolveModularFpt(const Instance& inst, const ModularPartition& mp,
                            const FptOptions& options = {});

struct AssignableSet {
  std::uint32_t members = 0;  // bitmask over AssignableFamily::modules
  int union_size = 0;         // |union of the member modules|
  int guaranteed = 0;         // d_S: items no member vertex dominates
};

struct AssignableFamily {
  std::vector<Module> modules;
  std::vector<AssignableSet> sets;
};

// Throws kNotAPartition if the modules are not disjoint independent-set
// modules covering V, or if there are more than 20 of them.
AssignableFamily ComputeAssignableSets(const PreferenceGraph& g,
                                       std::span<const Module> is_modules);

// Feasibility system for one guessed sub-family and threshold:
//   delta x_S >= d_S x_S + |U S| x_S - sum_I y_{S,I}    for S in the guess
//   sum_S x_S = k,   sum_{S ni I} y_{S,I} <= |I|,   x_S >= 1,   y_{S,I} >= x_S
struct IlpModel {
  int delta = 0;
  int agents = 0;
  std::vector<int> module_sizes;
  std::vector<AssignableSet> sets;
};

struct IlpSolution {
  std::vector<int> x;               // per set
  std::vector<std::vector<int>> y;  // per set, per module (0 if not member)
};

// Enumerates x; for each x the y-part is a transportation problem decided
// by max flow. `work` is increased by the number of x vectors tried.
std::optional<IlpSolution> SolveIlpFeasibility(const IlpModel& model,
                                               std::uint64_t* work = nullptr);

// Does (x, y) satisfy every constraint of the model?
bool SatisfiesIlp(const IlpModel& model, const IlpSolution& solution);

struct IsModuleOptions {
  std::uint64_t guess_budget = 10'000'000;
};

// Throws kNotAllIsModules, kBudgetExceeded, kTooManyAgents (k > n).
SolveResult SolveIsModules(const Instance& inst, const AssignableFamily& fam,
                           const IsModuleOptions& options = {});

}  // namespace fdag

#endif  // FDAG_MODULAR_H_
