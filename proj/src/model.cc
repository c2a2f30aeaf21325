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

#include "fdag/model.h"

#include <algorithm>

#include "fdag/error.h"

namespace fdag {

Instance MakeInstance(PreferenceGraph graph, int agents,
                      std::optional<int> threshold) {
  if (agents < 1) {
    throw Error(ErrorCode::kInvalidArgument, "agent count must be >= 1");
  }
  if (threshold && (*threshold < 0 || *threshold > graph.size())) {
    throw Error(ErrorCode::kInvalidArgument, "threshold outside [0, n]");
  }
  return Instance{std::move(graph), agents, threshold};
}

void Allocation::Give(int agent, Vertex v) {
  auto& bundle = bundles[agent];
  bundle.insert(std::lower_bound(bundle.begin(), bundle.end(), v), v);
}

void ValidateAllocation(const Instance& inst, const Allocation& alloc) {
  if (alloc.agents() != inst.agents) {
    throw Error(ErrorCode::kInvalidAllocation,
                "allocation has " + std::to_string(alloc.agents()) +
                    " agents, instance has " + std::to_string(inst.agents));
  }
  std::vector<int> owner(inst.items(), -1);
  for (int a = 0; a < alloc.agents(); ++a) {
    for (Vertex v : alloc.bundles[a]) {
      if (v < 0 || v >= inst.items()) {
        throw Error(ErrorCode::kInvalidAllocation,
                    "item " + std::to_string(v) + " out of range");
      }
      if (owner[v] >= 0) {
        throw Error(ErrorCode::kInvalidAllocation,
                    "item " + std::to_string(v) + " given to agents " +
                        std::to_string(owner[v]) + " and " + std::to_string(a));
      }
      owner[v] = a;
    }
  }
}

DissatisfactionProfile ComputeProfile(const Instance& inst,
                                      const Allocation& alloc) {
  ValidateAllocation(inst, alloc);
  DissatisfactionProfile profile(alloc.agents());
  for (int a = 0; a < alloc.agents(); ++a) {
    profile[a] =
        inst.items() -
        static_cast<int>(Dominated(inst.graph, alloc.bundles[a]).count());
  }
  return profile;
}

Allocation NormalizeToAntichains(const Instance& inst,
                                 const Allocation& alloc) {
  ValidateAllocation(inst, alloc);
  const PreferenceGraph& g = inst.graph;
  Allocation out = Allocation::Empty(alloc.agents());
  for (int a = 0; a < alloc.agents(); ++a) {
    const auto& bundle = alloc.bundles[a];
    for (Vertex v : bundle) {
      const bool dominated =
          std::any_of(bundle.begin(), bundle.end(),
                      [&](Vertex u) { return u != v && g.reaches(u, v); });
      if (!dominated) out.bundles[a].push_back(v);
    }
  }
  return out;
}

int MaxDissatisfaction(const DissatisfactionProfile& profile) {
  return profile.empty() ? 0
                         : *std::max_element(profile.begin(), profile.end());
}

DecisionResult VerifyDecision(const Instance& inst, const Allocation& alloc) {
  if (!inst.threshold) {
    throw Error(ErrorCode::kMissingThreshold, "instance has no threshold");
  }
  DecisionResult result;
  result.profile = ComputeProfile(inst, alloc);
  result.accepted = MaxDissatisfaction(result.profile) <= *inst.threshold;
  return result;
}

SolveResult MakeResult(const Instance& inst, Allocation alloc,
                       std::string solver, std::string lower_bound_note) {
  for (auto& bundle : alloc.bundles) std::sort(bundle.begin(), bundle.end());
  SolveResult result;
  result.profile = ComputeProfile(inst, alloc);
  result.optimum = MaxDissatisfaction(result.profile);
  result.allocation = std::move(alloc);
  result.solver = std::move(solver);
  result.lower_bound_note = std::move(lower_bound_note);
  return result;
}

}  // namespace fdag
