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

#include "fdag/structured.h"

#include <algorithm>
#include <boost/functional/hash.hpp>
#include <stdexcept>
#include <unordered_map>

#include "fdag/error.h"

namespace fdag {

// ---------------------------------------------------------------------------
// Two agents.

SolveResult SolveTwoAgents(const Instance& inst) {
  if (inst.agents != 2) {
    throw Error(ErrorCode::kWrongAgentCount, "two-agent solver needs k = 2");
  }
  const PreferenceGraph& g = inst.graph;
  if (g.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "two-agent solver needs n >= 2");
  }
  const std::vector<Vertex> sources = Sources(g);
  const std::size_t half = sources.size() / 2;
  const std::vector<Vertex> first(sources.begin(), sources.begin() + half);
  const std::vector<Vertex> second(sources.begin() + half, sources.end());

  // Sources of G - S: non-sources whose in-neighbours are all sources.
  std::vector<bool> is_source(g.size(), false);
  for (Vertex s : sources) is_source[s] = true;
  std::vector<Vertex> next_layer;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (is_source[v]) continue;
    const auto in = g.in(v);
    if (std::all_of(in.begin(), in.end(),
                    [&](Vertex u) { return is_source[u]; })) {
      next_layer.push_back(v);
    }
  }

  const VertexSet covered_first = Dominated(g, first);
  const VertexSet covered_second = Dominated(g, second);
  Allocation alloc = Allocation::Empty(2);
  alloc.bundles[0] = first;
  alloc.bundles[1] = second;
  for (Vertex v : next_layer) {
    if (!covered_first.test(v)) alloc.Give(0, v);
    if (!covered_second.test(v)) alloc.Give(1, v);
  }
  const int bound = static_cast<int>((sources.size() + 1) / 2);
  return MakeResult(inst, std::move(alloc), "two_agents",
                    "ceil(|sources|/2) = " + std::to_string(bound));
}

// ---------------------------------------------------------------------------
// Width at most two.

AuxiliaryMatchingGraph BuildAuxiliaryMatchingGraph(
    const PreferenceGraph& g, const WidthCertificate& width) {
  if (width.width > 2) {
    throw Error(ErrorCode::kWidthTooLarge,
                "width " + std::to_string(width.width) + " exceeds 2");
  }
  const int n = g.size();
  std::vector<bool> in_first(n, false);
  if (!width.chains.empty()) {
    for (Vertex v : width.chains[0]) in_first[v] = true;
  }
  AuxiliaryMatchingGraph aux;
  aux.graph.left = n;
  aux.graph.right = n;
  for (Vertex v = 0; v < n; ++v) {
    aux.graph.edges.push_back(
        {v, v, n - static_cast<std::int64_t>(g.reach(v).count())});
    aux.bundles.push_back({v});
  }
  for (Vertex x = 0; x < n; ++x) {
    if (!in_first[x]) continue;
    for (Vertex y = 0; y < n; ++y) {
      if (in_first[y] || g.comparable(x, y)) continue;
      const VertexSet both = g.reach(x) | g.reach(y);
      aux.graph.edges.push_back(
          {x, y, n - static_cast<std::int64_t>(both.count())});
      aux.bundles.push_back({std::min(x, y), std::max(x, y)});
    }
  }
  return aux;
}

SolveResult SolveWidthTwo(const Instance& inst, const WidthCertificate& width) {
  if (width.width > 2) {
    throw Error(ErrorCode::kWidthTooLarge,
                "width " + std::to_string(width.width) + " exceeds 2");
  }
  if (inst.agents > inst.items()) {
    throw Error(ErrorCode::kTooManyAgents, "width-two solver needs k <= n");
  }
  const AuxiliaryMatchingGraph aux =
      BuildAuxiliaryMatchingGraph(inst.graph, width);
  const auto matching = BottleneckKMatching(aux.graph, inst.agents);
  if (!matching) {
    // The singleton edges alone form a perfect matching.
    throw std::logic_error("auxiliary graph lacks a k-matching");
  }
  Allocation alloc = Allocation::Empty(inst.agents);
  int agent = 0;
  for (const WeightedEdge& e : matching->edges) {
    for (std::size_t i = 0; i < aux.graph.edges.size(); ++i) {
      const WeightedEdge& candidate = aux.graph.edges[i];
      if (candidate.left == e.left && candidate.right == e.right) {
        for (Vertex v : aux.bundles[i]) alloc.Give(agent, v);
        break;
      }
    }
    ++agent;
  }
  SolveResult result = MakeResult(inst, std::move(alloc), "width_two");
  if (result.optimum != matching->bottleneck) {
    throw std::logic_error("bottleneck disagrees with reconstructed profile");
  }
  return result;
}

SolveResult SolveWidthTwo(const Instance& inst) {
  return SolveWidthTwo(inst, ComputeWidth(inst.graph));
}

// ---------------------------------------------------------------------------
// Out-stars.

StarProfile ComputeStarProfile(const PreferenceGraph& g) {
  if (!IsOutStarCollection(g)) {
    throw Error(ErrorCode::kNotOutStars,
                "graph is not a collection of out-stars");
  }
  StarProfile profile;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!g.in(v).empty()) continue;
    if (g.out(v).empty()) {
      profile.singletons.push_back(v);
    } else {
      profile.stars.push_back({v, {g.out(v).begin(), g.out(v).end()}});
    }
  }
  std::stable_sort(profile.stars.begin(), profile.stars.end(),
                   [](const StarProfile::Star& a, const StarProfile::Star& b) {
                     return a.leaves.size() > b.leaves.size();
                   });
  return profile;
}

namespace {

SolveResult OutStarGreedy(const Instance& inst, bool allow_fallback) {
  const StarProfile profile = ComputeStarProfile(inst.graph);
  const int k = inst.agents;
  const int star_count = static_cast<int>(profile.stars.size());
  std::vector<int> satisfaction(k, 0);
  std::vector<int> root_owner(star_count, -1);
  Allocation alloc = Allocation::Empty(k);

  auto least_satisfied = [&](int skip) {
    int best = -1;
    for (int a = 0; a < k; ++a) {
      if (a == skip) continue;
      if (best < 0 || satisfaction[a] < satisfaction[best]) best = a;
    }
    return best;
  };

  for (int i = 0; i < star_count; ++i) {
    const int j = least_satisfied(-1);
    root_owner[i] = j;
    alloc.Give(j, profile.stars[i].root);
    satisfaction[j] += static_cast<int>(profile.stars[i].leaves.size()) + 1;
  }

  // Pools of unassigned items; leaves are consumed from the back.
  std::vector<std::vector<Vertex>> leaf_pool(star_count);
  for (int i = 0; i < star_count; ++i) {
    leaf_pool[i].assign(profile.stars[i].leaves.rbegin(),
                        profile.stars[i].leaves.rend());
  }
  std::vector<Vertex> singleton_pool(profile.singletons.rbegin(),
                                     profile.singletons.rend());
  // owner_star[v]: star index of a leaf, -1 for singletons.
  std::vector<int> owner_star(inst.items(), -1);
  for (int i = 0; i < star_count; ++i) {
    for (Vertex leaf : profile.stars[i].leaves) owner_star[leaf] = i;
  }
  // Leaves and singletons held by each agent, in acquisition order.
  std::vector<std::vector<Vertex>> held(k);
  int remaining = static_cast<int>(profile.singletons.size());
  for (const auto& pool : leaf_pool) remaining += static_cast<int>(pool.size());

  auto take = [&](std::vector<Vertex>& pool, int agent) {
    const Vertex v = pool.back();
    pool.pop_back();
    alloc.Give(agent, v);
    held[agent].push_back(v);
    ++satisfaction[agent];
    --remaining;
  };

  while (remaining > 0) {
    const int j = least_satisfied(-1);
    int star = -1;
    for (int i = 0; i < star_count; ++i) {
      if (root_owner[i] == j || leaf_pool[i].empty()) continue;
      if (star < 0 || leaf_pool[i].size() > leaf_pool[star].size()) star = i;
    }
    if (star >= 0) {
      take(leaf_pool[star], j);
      continue;
    }
    if (!singleton_pool.empty()) {
      take(singleton_pool, j);
      continue;
    }

    // Every unassigned leaf hangs under a root of j: swap one of them with
    // an item of another agent that j can use.
    int blocked = -1;
    for (int i = 0; i < star_count; ++i) {
      if (!leaf_pool[i].empty()) {
        blocked = i;
        break;
      }
    }
    int partner = -1;
    std::size_t partner_slot = 0;
    for (int h = 0; h < k && partner < 0; ++h) {
      if (h == j) continue;
      for (std::size_t s = 0; s < held[h].size(); ++s) {
        const int origin = owner_star[held[h][s]];
        if (origin < 0 || root_owner[origin] != j) {
          partner = h;
          partner_slot = s;
          break;
        }
      }
    }
    if (partner >= 0) {
      const Vertex w = held[partner][partner_slot];
      auto& bundle = alloc.bundles[partner];
      bundle.erase(std::find(bundle.begin(), bundle.end(), w));
      held[partner].erase(held[partner].begin() + partner_slot);
      --satisfaction[partner];
      take(leaf_pool[blocked], partner);
      alloc.Give(j, w);
      held[j].push_back(w);
      ++satisfaction[j];
      continue;
    }
    if (!allow_fallback) {
      throw std::logic_error("out-star exchange partner missing with k >= 3");
    }
    take(leaf_pool[blocked], least_satisfied(j));
  }
  return MakeResult(inst, std::move(alloc), "out_stars");
}

}  // namespace

SolveResult SolveOutStars(const Instance& inst) {
  if (inst.agents == 2) {
    throw Error(ErrorCode::kWrongAgentCount,
                "out-star greedy is not optimal for k = 2");
  }
  return OutStarGreedy(inst, false);
}

namespace internal {

SolveResult RunOutStarGreedy(const Instance& inst) {
  return OutStarGreedy(inst, true);
}

}  // namespace internal

// ---------------------------------------------------------------------------
// Out-forests.

namespace {

struct ProfileHash {
  std::size_t operator()(const Profile& p) const {
    return boost::hash_range(p.begin(), p.end());
  }
};

// One step of folding children into the running sum S.
struct Stage {
  ProfileSet profiles;
  // For each profile: index in the previous stage and in the child's set.
  std::vector<std::pair<int, int>> origin;
};

struct NodeTable {
  std::vector<Stage> stages;     // stages[0] = {0^k}
  std::vector<Vertex> children;  // child folded in at stage t+1, -1 if cut
  ProfileSet profiles;
  std::vector<int> choice;  // agent owning the vertex, -1 for none
  std::vector<int> base;    // index into stages.back().profiles
};

class ForestDp {
 public:
  ForestDp(const Instance& inst, const OutForestOptions& options)
      : inst_(inst), options_(options), k_(inst.agents), tables_(inst.items()) {
    const PreferenceGraph& g = inst.graph;
    if (!IsOutForest(g)) {
      throw Error(ErrorCode::kNotAForest, "graph is not an out-forest");
    }
    if (k_ > options.max_agents) {
      throw Error(ErrorCode::kStateSpaceExceeded,
                  "k = " + std::to_string(k_) + " exceeds the DP agent cap " +
                      std::to_string(options.max_agents));
    }
    depth_ = Depths(g);
    subtree_size_.assign(g.size(), 1);
    const auto& topo = g.topo_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      for (Vertex w : g.out(*it)) subtree_size_[*it] += subtree_size_[w];
    }
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      if (!Cut(*it)) BuildNode(*it);
    }
  }

  const NodeTable& table(Vertex v) const { return tables_[v]; }

  // Folds the given roots like the children of a virtual vertex.
  NodeTable Combine(const std::vector<Vertex>& roots) {
    NodeTable top;
    Fold(top, roots);
    return top;
  }

  void Assign(const NodeTable& t, int index, Allocation& alloc,
              Vertex self) const {
    if (self >= 0 && t.choice[index] >= 0) alloc.Give(t.choice[index], self);
    Unwind(t, self >= 0 ? t.base[index] : index, alloc);
  }

 private:
  bool Cut(Vertex v) const { return options_.prune_depth && depth_[v] > k_; }

  void Fold(NodeTable& t, const std::vector<Vertex>& children) {
    Stage start;
    start.profiles.push_back(Profile(k_, 0));
    start.origin.push_back({-1, -1});
    t.stages.push_back(std::move(start));
    for (Vertex c : children) {
      const bool cut = Cut(c);
      const ProfileSet constant{Profile(k_, subtree_size_[c])};
      const ProfileSet& child = cut ? constant : tables_[c].profiles;
      const Stage& prev = t.stages.back();
      Stage next;
      std::unordered_map<Profile, int, ProfileHash> index;
      for (int i = 0; i < static_cast<int>(prev.profiles.size()); ++i) {
        for (int j = 0; j < static_cast<int>(child.size()); ++j) {
          Profile sum = prev.profiles[i];
          for (int a = 0; a < k_; ++a) sum[a] += child[j][a];
          if (index.emplace(sum, static_cast<int>(next.profiles.size()))
                  .second) {
            next.profiles.push_back(std::move(sum));
            next.origin.push_back({i, j});
            Guard(next.profiles.size());
          }
        }
      }
      t.stages.push_back(std::move(next));
      t.children.push_back(cut ? -1 : c);
    }
  }

  void BuildNode(Vertex u) {
    NodeTable& t = tables_[u];
    const auto out = inst_.graph.out(u);
    Fold(t, std::vector<Vertex>(out.begin(), out.end()));
    const ProfileSet& rest = t.stages.back().profiles;
    std::unordered_map<Profile, int, ProfileHash> index;
    auto add = [&](Profile p, int choice, int base) {
      if (index.emplace(p, static_cast<int>(t.profiles.size())).second) {
        t.profiles.push_back(std::move(p));
        t.choice.push_back(choice);
        t.base.push_back(base);
        Guard(t.profiles.size());
      }
    };
    for (int j = 0; j < k_; ++j) {
      for (int i = 0; i < static_cast<int>(rest.size()); ++i) {
        Profile p = rest[i];
        for (int a = 0; a < k_; ++a) p[a] = a == j ? 0 : p[a] + 1;
        add(std::move(p), j, i);
      }
    }
    // A leaf may also stay unallocated. Elsewhere that option is dominated
    // by giving the vertex to any agent.
    if (out.empty()) add(Profile(k_, 1), -1, 0);
  }

  void Unwind(const NodeTable& t, int index, Allocation& alloc) const {
    for (int s = static_cast<int>(t.stages.size()) - 1; s > 0; --s) {
      const auto [prev, child_index] = t.stages[s].origin[index];
      const Vertex child = t.children[s - 1];
      if (child >= 0) Assign(tables_[child], child_index, alloc, child);
      index = prev;
    }
  }

  void Guard(std::size_t size) const {
    if (size > options_.max_profiles) {
      throw Error(ErrorCode::kStateSpaceExceeded,
                  "profile set exceeds " +
                      std::to_string(options_.max_profiles) + " entries");
    }
  }

  const Instance& inst_;
  const OutForestOptions& options_;
  const int k_;
  std::vector<int> depth_;
  std::vector<int> subtree_size_;
  std::vector<NodeTable> tables_;
};

}  // namespace

SolveResult SolveOutForest(const Instance& inst,
                           const OutForestOptions& options) {
  ForestDp dp(inst, options);
  const NodeTable top = dp.Combine(Sources(inst.graph));
  const ProfileSet& finals = top.stages.back().profiles;
  int best = 0;
  for (int i = 1; i < static_cast<int>(finals.size()); ++i) {
    if (MaxDissatisfaction(finals[i]) < MaxDissatisfaction(finals[best])) {
      best = i;
    }
  }
  Allocation alloc = Allocation::Empty(inst.agents);
  dp.Assign(top, best, alloc, -1);
  SolveResult result = MakeResult(inst, std::move(alloc), "out_forest");
  if (result.profile != finals[best]) {
    throw std::logic_error("out-forest reconstruction mismatch");
  }
  return result;
}

ProfileSet SubtreeProfiles(const Instance& inst, Vertex root,
                           const OutForestOptions& options) {
  if (root < 0 || root >= inst.items()) {
    throw Error(ErrorCode::kInvalidVertex, "root out of range");
  }
  ForestDp dp(inst, options);
  ProfileSet result = dp.table(root).profiles;
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace fdag
