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

#ifndef FDAG_MODEL_H_
#define FDAG_MODEL_H_

#include <optional>
#include <string>
#include <vector>

#include "fdag/dag.h"

namespace fdag {

// k agents sharing one preference graph; `threshold` is the d of the
// decision variant.
struct Instance {
  PreferenceGraph graph;
  int agents = 1;
  std::optional<int> threshold;

  int items() const { return graph.size(); }
};

// Throws kInvalidArgument unless agents >= 1 and threshold is in [0, n].
Instance MakeInstance(PreferenceGraph graph, int agents,
                      std::optional<int> threshold = std::nullopt);

// bundles[i] is the item set of agent i. Bundles are kept sorted.
struct Allocation {
  std::vector<std::vector<Vertex>> bundles;

  static Allocation Empty(int agents) {
    return Allocation{std::vector<std::vector<Vertex>>(agents)};
  }
  int agents() const { return static_cast<int>(bundles.size()); }
  void Give(int agent, Vertex v);

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

using DissatisfactionProfile = std::vector<int>;

// Throws kInvalidAllocation on a wrong agent count, out-of-range items or
// items shared between agents.
void ValidateAllocation(const Instance& inst, const Allocation& alloc);

// n - |union of succ[v] over the bundle| per agent; an empty bundle scores n.
DissatisfactionProfile ComputeProfile(const Instance& inst,
                                      const Allocation& alloc);

// Drops every item dominated by another item of the same bundle.
Allocation NormalizeToAntichains(const Instance& inst, const Allocation& alloc);

int MaxDissatisfaction(const DissatisfactionProfile& profile);

struct DecisionResult {
  bool accepted = false;
  DissatisfactionProfile profile;
};

// Throws kMissingThreshold when the instance carries no threshold.
DecisionResult VerifyDecision(const Instance& inst, const Allocation& alloc);

struct SolveResult {
  int optimum = 0;
  Allocation allocation;
  DissatisfactionProfile profile;
  std::string solver;
  std::string lower_bound_note;
};

// Validates `alloc`, recomputes its profile and takes the maximum as the
// optimum claim.
SolveResult MakeResult(const Instance& inst, Allocation alloc,
                       std::string solver, std::string lower_bound_note = {});

}  // namespace fdag

#endif  // FDAG_MODEL_H_
