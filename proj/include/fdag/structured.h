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

// Polynomial solvers for structured preference graphs: two agents, graphs
// of width at most two, collections of out-stars and out-forests with a
// small number of agents.

#ifndef FDAG_STRUCTURED_H_
#define FDAG_STRUCTURED_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fdag/dag.h"
#include "fdag/matching.h"
#include "fdag/model.h"

namespace fdag {

// Every source is undominated for someone, so ceil(|S|/2) is optimal. The
// first floor(|S|/2) sources (by index) go to agent 0.
// Throws kWrongAgentCount unless k == 2, kInvalidArgument if n < 2.
SolveResult SolveTwoAgents(const Instance& inst);

// The bipartite graph whose k-matchings are exactly the allocations giving
// every agent a single item or a two-item antichain. Left node v stands for
// v itself when v lies in the first chain and for its copy v' otherwise;
// right nodes mirror this, so the singleton edge {v, v'} is always (v, v).
struct AuxiliaryMatchingGraph {
  WeightedBipartiteGraph graph;
  // Parallel to graph.edges: the item bundle each edge represents.
  std::vector<std::vector<Vertex>> bundles;
};

AuxiliaryMatchingGraph BuildAuxiliaryMatchingGraph(
    const PreferenceGraph& g, const WidthCertificate& width);

// Throws kWidthTooLarge, kTooManyAgents (k > n).
SolveResult SolveWidthTwo(const Instance& inst, const WidthCertificate& width);
SolveResult SolveWidthTwo(const Instance& inst);

struct StarProfile {
  struct Star {
    Vertex root;
    std::vector<Vertex> leaves;
  };
  // Sorted by leaf count, descending; ties by root index.
  std::vector<Star> stars;
  std::vector<Vertex> singletons;
};

// Throws kNotOutStars.
StarProfile ComputeStarProfile(const PreferenceGraph& g);

// Greedy root distribution followed by leaf distribution with exchanges.
// Throws kNotOutStars, kWrongAgentCount for k == 2 (use SolveTwoAgents).
SolveResult SolveOutStars(const Instance& inst);

struct OutForestOptions {
  int max_agents = 4;
  std::size_t max_profiles = 4'000'000;
  // Ignore vertices deeper than k; they stay unallocated.
  bool prune_depth = true;
};

using Profile = std::vector<int>;
using ProfileSet = std::vector<Profile>;

// Dynamic programming over sets of dissatisfaction profiles.
// Throws kNotAForest; kStateSpaceExceeded when k exceeds max_agents or a
// profile set outgrows max_profiles.
SolveResult SolveOutForest(const Instance& inst,
                           const OutForestOptions& options = {});

// All profiles realisable on the out-tree rooted at `root`, sorted.
ProfileSet SubtreeProfiles(const Instance& inst, Vertex root,
                           const OutForestOptions& options = {});

namespace internal {

// The out-star greedy without the k >= 3 guard. With k == 2 it reproduces
// the known failure of the greedy; when no exchange partner exists the
// leaf goes to the least satisfied agent that can still use one.
SolveResult RunOutStarGreedy(const Instance& inst);

}  // namespace internal

}  // namespace fdag

#endif  // FDAG_STRUCTURED_H_
