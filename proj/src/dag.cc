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

#include "fdag/dag.h"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "fdag/error.h"
#include "fdag/matching.h"

namespace fdag {
namespace {

// Finds a directed cycle among the vertices left over by Kahn's algorithm.
// Every leftover vertex has a leftover in-neighbour, so walking backwards
// must revisit a vertex.
std::vector<Vertex> FindCycle(const std::vector<std::vector<Vertex>>& in_adj,
                              const std::vector<int>& remaining_in) {
  Vertex start = 0;
  while (remaining_in[start] == 0) ++start;
  std::vector<int> seen_at(in_adj.size(), -1);
  std::vector<Vertex> walk;
  Vertex v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    for (Vertex u : in_adj[v]) {
      if (remaining_in[u] > 0) {
        v = u;
        break;
      }
    }
  }
  std::vector<Vertex> cycle(walk.begin() + seen_at[v], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace

PreferenceGraph PreferenceGraph::Build(int n, std::span<const Arc> arcs) {
  if (n < 0) throw Error(ErrorCode::kInvalidVertex, "negative vertex count");
  PreferenceGraph g;
  g.n_ = n;
  g.out_adj_.resize(n);
  g.in_adj_.resize(n);
  std::set<Arc> seen;
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      std::ostringstream msg;
      msg << "arc (" << a.tail << "," << a.head << ") outside [0," << n << ")";
      throw Error(ErrorCode::kInvalidVertex, msg.str());
    }
    if (a.tail == a.head) {
      throw Error(ErrorCode::kDuplicateArc,
                  "loop at vertex " + std::to_string(a.tail));
    }
    if (!seen.insert(a).second) {
      std::ostringstream msg;
      msg << "duplicate arc (" << a.tail << "," << a.head << ")";
      throw Error(ErrorCode::kDuplicateArc, msg.str());
    }
    g.arcs_.push_back(a);
    g.out_adj_[a.tail].push_back(a.head);
    g.in_adj_[a.head].push_back(a.tail);
  }
  for (auto& adj : g.out_adj_) std::sort(adj.begin(), adj.end());
  for (auto& adj : g.in_adj_) std::sort(adj.begin(), adj.end());

  // Kahn with a min-heap so the order is the lexicographically smallest.
  std::vector<int> indeg(n);
  for (Vertex v = 0; v < n; ++v) {
    indeg[v] = static_cast<int>(g.in_adj_[v].size());
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    const Vertex v = ready.top();
    ready.pop();
    g.topo_.push_back(v);
    for (Vertex w : g.out_adj_[v]) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(g.topo_.size()) != n) {
    std::vector<Vertex> cycle = FindCycle(g.in_adj_, indeg);
    std::ostringstream msg;
    msg << "cycle:";
    for (Vertex v : cycle) msg << ' ' << v;
    throw Error(ErrorCode::kCycleDetected, msg.str(), std::move(cycle));
  }
  g.topo_pos_.resize(n);
  for (int i = 0; i < n; ++i) g.topo_pos_[g.topo_[i]] = i;

  g.reach_.assign(n, VertexSet(n));
  for (int i = n - 1; i >= 0; --i) {
    const Vertex v = g.topo_[i];
    g.reach_[v].set(v);
    for (Vertex w : g.out_adj_[v]) g.reach_[v] |= g.reach_[w];
  }
  g.pred_.assign(n, VertexSet(n));
  for (Vertex v = 0; v < n; ++v) {
    for (auto u = g.reach_[v].find_first(); u != VertexSet::npos;
         u = g.reach_[v].find_next(u)) {
      g.pred_[u].set(v);
    }
  }
  return g;
}

bool PreferenceGraph::has_arc(Vertex u, Vertex v) const {
  return std::binary_search(out_adj_[u].begin(), out_adj_[u].end(), v);
}

std::vector<Vertex> Sources(const PreferenceGraph& g) {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.in(v).empty()) result.push_back(v);
  }
  return result;
}

bool IsAntichain(const PreferenceGraph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[i] != s[j] && g.reaches(s[i], s[j])) return false;
    }
  }
  return true;
}

VertexSet Dominated(const PreferenceGraph& g, std::span<const Vertex> items) {
  VertexSet result = g.EmptySet();
  for (Vertex v : items) result |= g.reach(v);
  return result;
}

WidthCertificate ComputeWidth(const PreferenceGraph& g) {
  const int n = g.size();
  BipartiteGraph split(n, n);
  for (Vertex u = 0; u < n; ++u) {
    const VertexSet& r = g.reach(u);
    for (auto v = r.find_first(); v != VertexSet::npos; v = r.find_next(v)) {
      if (static_cast<Vertex>(v) != u) split.AddEdge(u, static_cast<int>(v));
    }
  }
  const BipartiteMatching matching = MaxBipartiteMatching(split);

  WidthCertificate cert;
  cert.width = n - matching.size;
  // Chain heads are vertices nobody is matched into.
  for (Vertex v : g.topo_order()) {
    if (matching.mate_right[v] != BipartiteMatching::kUnmatched) continue;
    std::vector<Vertex> chain;
    for (int u = v; u != BipartiteMatching::kUnmatched;
         u = matching.mate_left[u]) {
      chain.push_back(u);
    }
    cert.chains.push_back(std::move(chain));
  }

  const VertexCover cover = MinVertexCover(split, matching);
  for (Vertex v = 0; v < n; ++v) {
    if (!cover.left[v] && !cover.right[v]) cert.antichain_witness.push_back(v);
  }
  return cert;
}

std::vector<int> Depths(const PreferenceGraph& g) {
  std::vector<int> depth(g.size(), 1);
  for (Vertex v : g.topo_order()) {
    if (g.in(v).size() > 1) {
      throw Error(ErrorCode::kNotAForest,
                  "vertex " + std::to_string(v) + " has in-degree > 1");
    }
    if (!g.in(v).empty()) depth[v] = depth[g.in(v)[0]] + 1;
  }
  return depth;
}

int Depth(const PreferenceGraph& g, Vertex v) {
  if (v < 0 || v >= g.size()) {
    throw Error(ErrorCode::kInvalidVertex, "vertex out of range");
  }
  return Depths(g)[v];
}

bool IsEdgeless(const PreferenceGraph& g) { return g.arc_count() == 0; }

bool IsDirectedMatching(const PreferenceGraph& g) {
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.in(v).size() + g.out(v).size() != 1) return false;
  }
  return true;
}

bool IsOutForest(const PreferenceGraph& g) {
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.in(v).size() > 1) return false;
  }
  return true;
}

bool IsOutStarCollection(const PreferenceGraph& g) {
  if (!IsOutForest(g)) return false;
  for (const Arc& a : g.arcs()) {
    if (!g.in(a.tail).empty() || !g.out(a.head).empty()) return false;
  }
  return true;
}

std::vector<std::string> ShapeTags::Names() const {
  std::vector<std::string> names;
  if (edgeless) names.push_back("edgeless");
  if (directed_matching) names.push_back("directed_matching");
  if (out_star_collection) names.push_back("out_star_collection");
  if (out_forest) names.push_back("out_forest");
  if (width_le_2) names.push_back("width_le_2");
  if (general) names.push_back("general");
  return names;
}

ShapeTags ClassifyShape(const PreferenceGraph& g) {
  ShapeTags tags;
  tags.edgeless = IsEdgeless(g);
  tags.directed_matching = IsDirectedMatching(g);
  tags.out_star_collection = IsOutStarCollection(g);
  tags.out_forest = IsOutForest(g);
  tags.width = ComputeWidth(g).width;
  tags.width_le_2 = tags.width <= 2;
  tags.general = !tags.out_forest;
  return tags;
}

}  // namespace fdag
