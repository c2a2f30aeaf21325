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

#include "fdag/oracle.h"

#include <algorithm>
#include <bit>
#include <vector>

#include "fdag/error.h"

namespace fdag {
namespace {

// Items are decided in topological order, so an item can only be dominated
// by items decided before it. Once decided, an item that an agent does not
// dominate stays undominated for that agent; `missed_` is therefore an exact
// running lower bound on every agent's final dissatisfaction.
class Search {
 public:
  Search(const Instance& inst, const OracleOptions& options, int bound)
      : inst_(inst),
        options_(options),
        k_(inst.agents),
        best_(bound),
        reach_(inst.items()),
        dominated_(inst.agents, 0),
        missed_(inst.agents, 0),
        owner_(inst.items(), -1) {
    const PreferenceGraph& g = inst.graph;
    for (Vertex v = 0; v < g.size(); ++v) {
      std::uint64_t mask = 0;
      const VertexSet& r = g.reach(v);
      for (auto u = r.find_first(); u != VertexSet::npos; u = r.find_next(u)) {
        mask |= std::uint64_t{1} << u;
      }
      reach_[v] = mask;
    }
  }

  // Looks for an assignment whose max dissatisfaction is < best_. With
  // stop_at_first the first such leaf ends the search.
  void Run(bool stop_at_first) {
    stop_at_first_ = stop_at_first;
    Recurse(0, 0);
  }

  bool found() const { return found_; }
  int best() const { return best_; }
  const std::vector<int>& best_owner() const { return best_owner_; }

 private:
  void Recurse(int position, int used_agents) {
    if (++nodes_ > options_.node_budget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "oracle exceeded node budget of " +
                      std::to_string(options_.node_budget));
    }
    if (position == inst_.items()) {
      const int value = *std::max_element(missed_.begin(), missed_.end());
      if (value < best_) {
        best_ = value;
        best_owner_ = owner_;
        found_ = true;
      }
      return;
    }
    const Vertex v = inst_.graph.topo_order()[position];
    const std::uint64_t bit = std::uint64_t{1} << v;

    // Agents beyond used_agents are interchangeable with the first unused
    // one, so only that one is tried.
    const int limit = std::min(used_agents + 1, k_);
    for (int a = 0; a < limit && !Done(); ++a) {
      if (dominated_[a] & bit) continue;  // would break the antichain
      if (!Feasible(bit, a)) continue;
      const std::uint64_t saved = dominated_[a];
      dominated_[a] |= reach_[v];
      Charge(bit, a, +1);
      owner_[v] = a;
      Recurse(position + 1, std::max(used_agents, a + 1));
      owner_[v] = -1;
      Charge(bit, a, -1);
      dominated_[a] = saved;
    }
    if (!Done() && Feasible(bit, -1)) {
      Charge(bit, -1, +1);
      Recurse(position + 1, used_agents);
      Charge(bit, -1, -1);
    }
  }

  // Would leaving v undominated for everyone except `taker` keep all
  // running bounds below best_?
  bool Feasible(std::uint64_t bit, int taker) const {
    for (int b = 0; b < k_; ++b) {
      if (b != taker && !(dominated_[b] & bit) && missed_[b] + 1 >= best_) {
        return false;
      }
    }
    return true;
  }

  void Charge(std::uint64_t bit, int taker, int delta) {
    for (int b = 0; b < k_; ++b) {
      if (b != taker && !(dominated_[b] & bit)) missed_[b] += delta;
    }
  }

  bool Done() const { return stop_at_first_ && found_; }

  const Instance& inst_;
  const OracleOptions& options_;
  const int k_;
  int best_;
  bool found_ = false;
  bool stop_at_first_ = false;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> reach_;
  std::vector<std::uint64_t> dominated_;
  std::vector<int> missed_;
  std::vector<int> owner_;
  std::vector<int> best_owner_;
};

Allocation FromOwners(int agents, const std::vector<int>& owner) {
  Allocation alloc = Allocation::Empty(agents);
  for (Vertex v = 0; v < static_cast<Vertex>(owner.size()); ++v) {
    if (owner[v] >= 0) alloc.bundles[owner[v]].push_back(v);
  }
  return alloc;
}

void CheckSize(const Instance& inst) {
  if (inst.items() > 64) {
    throw Error(ErrorCode::kBudgetExceeded, "oracle supports at most 64 items");
  }
}

}  // namespace

SolveResult BruteForceOptimum(const Instance& inst,
                              const OracleOptions& options) {
  CheckSize(inst);
  const int n = inst.items();
  // The all-empty allocation scores n, so anything strictly better is
  // searched for and n is the fallback.
  Search search(inst, options, n);
  search.Run(false);
  Allocation alloc = search.found()
                         ? FromOwners(inst.agents, search.best_owner())
                         : Allocation::Empty(inst.agents);
  return MakeResult(inst, std::move(alloc), "oracle");
}

DecisionWitness BruteForceDecision(const Instance& inst,
                                   const OracleOptions& options) {
  if (!inst.threshold) {
    throw Error(ErrorCode::kMissingThreshold, "decision needs a threshold");
  }
  CheckSize(inst);
  DecisionWitness result;
  if (*inst.threshold >= inst.items()) {
    result.feasible = true;
    result.witness = Allocation::Empty(inst.agents);
    return result;
  }
  Search search(inst, options, *inst.threshold + 1);
  search.Run(true);
  if (search.found()) {
    result.feasible = true;
    result.witness = FromOwners(inst.agents, search.best_owner());
  }
  return result;
}

}  // namespace fdag
