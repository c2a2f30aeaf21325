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

#include "fdag/generators.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fdag/error.h"

namespace fdag {

PreferenceGraph RandomDag(int n, double arc_probability, std::uint64_t seed) {
  if (arc_probability < 0.0 || arc_probability > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "probability outside [0, 1]");
  }
  SeededRng rng(seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.Shuffle(order);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.Chance(arc_probability)) arcs.push_back({order[i], order[j]});
    }
  }
  return PreferenceGraph::Build(n, arcs);
}

PreferenceGraph OutStars(const std::vector<int>& leaf_counts,
                         int singleton_count) {
  std::vector<Arc> arcs;
  int next = 0;
  for (int leaves : leaf_counts) {
    if (leaves < 1) {
      throw Error(ErrorCode::kInvalidArgument, "star needs at least one leaf");
    }
    const Vertex root = next++;
    for (int i = 0; i < leaves; ++i) arcs.push_back({root, next++});
  }
  return PreferenceGraph::Build(next + singleton_count, arcs);
}

PreferenceGraph DirectedMatching(int edge_count) {
  std::vector<Arc> arcs;
  for (int e = 0; e < edge_count; ++e) arcs.push_back({2 * e, 2 * e + 1});
  return PreferenceGraph::Build(2 * edge_count, arcs);
}

PreferenceGraph RandomOutForest(int n, double root_probability,
                                std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<Arc> arcs;
  for (Vertex v = 1; v < n; ++v) {
    if (rng.Chance(root_probability)) continue;
    arcs.push_back({static_cast<Vertex>(rng.Below(v)), v});
  }
  return PreferenceGraph::Build(n, arcs);
}

PreferenceGraph WidthTwo(int n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "width-two needs n >= 2");
  SeededRng rng(seed);
  const int first = rng.Between(1, n - 1);
  // Vertices [0, first) form chain A, the rest chain B. Interleave them
  // into one order and only add arcs going forward in it.
  std::vector<int> label(n);
  std::fill(label.begin(), label.begin() + first, 0);
  std::fill(label.begin() + first, label.end(), 1);
  rng.Shuffle(label);
  std::vector<Vertex> order;
  int next_a = 0;
  int next_b = first;
  for (int l : label) order.push_back(l == 0 ? next_a++ : next_b++);

  std::set<Arc> arcs;
  for (Vertex v = 0; v + 1 < first; ++v) arcs.insert({v, v + 1});
  for (Vertex v = first; v + 1 < n; ++v) arcs.insert({v, v + 1});
  const double density = rng.Unit() * 0.5;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool same_chain = (order[i] < first) == (order[j] < first);
      if (!same_chain && rng.Chance(density)) arcs.insert({order[i], order[j]});
    }
  }
  const std::vector<Arc> list(arcs.begin(), arcs.end());
  PreferenceGraph g = PreferenceGraph::Build(n, list);
  if (ComputeWidth(g).width > 2) {
    throw std::logic_error("width-two generator produced width > 2");
  }
  return g;
}

PreferenceGraph WidthTwoFigure() {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < 7; ++v) arcs.push_back({v, v + 1});
  for (Vertex v = 8; v < 13; ++v) arcs.push_back({v, v + 1});
  // A_i = i, B_i = 8 + i.
  arcs.push_back({0, 9});
  arcs.push_back({1, 10});
  arcs.push_back({1, 11});
  arcs.push_back({9, 3});
  arcs.push_back({12, 6});
  arcs.push_back({13, 7});
  return PreferenceGraph::Build(14, arcs);
}

PreferenceGraph ModuleBlowup(const std::vector<ModuleSpec>& modules,
                             const std::vector<Arc>& quotient_arcs) {
  std::vector<std::vector<Vertex>> members(modules.size());
  std::vector<Arc> arcs;
  int next = 0;
  for (std::size_t m = 0; m < modules.size(); ++m) {
    if (modules[m].size < 1) {
      throw Error(ErrorCode::kInvalidArgument, "module size must be >= 1");
    }
    for (int i = 0; i < modules[m].size; ++i) {
      if (modules[m].path && i > 0) arcs.push_back({next - 1, next});
      members[m].push_back(next++);
    }
  }
  for (const Arc& q : quotient_arcs) {
    for (Vertex u : members[q.tail]) {
      for (Vertex v : members[q.head]) arcs.push_back({u, v});
    }
  }
  return PreferenceGraph::Build(next, arcs);
}

ThreePaths MakeThreePaths(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  std::vector<Arc> arcs;
  for (int p = 0; p < 3; ++p) {
    for (int i = 0; i + 1 < k; ++i) arcs.push_back({p * k + i, p * k + i + 1});
  }
  ThreePaths out;
  out.instance = MakeInstance(PreferenceGraph::Build(3 * k, arcs), k);
  out.expected_optimum = (3 * (k - 1) + 1) / 2;

  // Agent i takes the vertex at depth a (0-based) on path 0, b on path 1
  // and c on path 2; its dissatisfaction is a + b + c.
  out.construction = Allocation::Empty(k);
  const int m = k / 2;
  for (int i = 0; i < k; ++i) {
    int b = 0;
    int c = 0;
    if (k % 2 == 1) {
      if (i <= m) {
        b = i + m;
        c = 2 * m - 2 * i;
      } else {
        b = i - m - 1;
        c = 4 * m + 1 - 2 * i;
      }
    } else {
      if (i < m) {
        b = i + m;
        c = 2 * m - 2 - 2 * i;
      } else {
        b = i - m;
        c = 4 * m - 1 - 2 * i;
      }
    }
    out.construction.Give(i, i);
    out.construction.Give(i, k + b);
    out.construction.Give(i, 2 * k + c);
  }
  return out;
}

ColoringReduction ReduceColoring(const UndirectedGraph& h, int k) {
  if (k < 3) throw Error(ErrorCode::kInvalidK, "reduction needs k >= 3");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : h.edges) {
    if (u < 0 || v < 0 || u >= h.n || v >= h.n || u == v ||
        !seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "source graph must be simple with vertices in range");
    }
  }
  const int nv = h.n;
  const int ne = static_cast<int>(h.edges.size());
  ColoringReduction red;
  red.source = h;
  red.k = k;
  red.original.assign(k, std::vector<Vertex>(nv));
  red.edge_vertex.assign(k, std::vector<Vertex>(ne));
  std::vector<Arc> arcs;
  for (int c = 0; c < k; ++c) {
    for (int v = 0; v < nv; ++v) red.original[c][v] = c * nv + v;
    for (int e = 0; e < ne; ++e) {
      const Vertex w = k * nv + c * ne + e;
      red.edge_vertex[c][e] = w;
      arcs.push_back({red.original[c][h.edges[e].first], w});
      arcs.push_back({red.original[c][h.edges[e].second], w});
    }
  }
  PreferenceGraph g = PreferenceGraph::Build(k * (nv + ne), arcs);
  int reach_sum = 0;
  for (int v = 0; v < nv; ++v) {
    reach_sum += static_cast<int>(g.reach(red.original[0][v]).count());
  }
  for (int e = 0; e < ne; ++e) {
    reach_sum += static_cast<int>(g.reach(red.edge_vertex[0][e]).count());
  }
  red.diss = k * (nv + ne) - reach_sum;
  red.instance = MakeInstance(std::move(g), k, red.diss);
  return red;
}

Allocation ColoringToAllocation(const ColoringReduction& red,
                                const std::vector<int>& coloring) {
  const UndirectedGraph& h = red.source;
  const int k = red.k;
  if (static_cast<int>(coloring.size()) != h.n) {
    throw Error(ErrorCode::kImproperColoring, "colouring has the wrong length");
  }
  for (int c : coloring) {
    if (c < 0 || c >= k) {
      throw Error(ErrorCode::kImproperColoring, "colour outside [0, k)");
    }
  }
  std::vector<int> edge_agent;
  for (auto [u, v] : h.edges) {
    if (coloring[u] == coloring[v]) {
      throw Error(ErrorCode::kImproperColoring, "edge {" + std::to_string(u) +
                                                    "," + std::to_string(v) +
                                                    "} is monochromatic");
    }
    int free = 0;
    while (free == coloring[u] || free == coloring[v]) ++free;
    edge_agent.push_back(free);
  }
  Allocation alloc = Allocation::Empty(k);
  for (int copy = 0; copy < k; ++copy) {
    for (int v = 0; v < h.n; ++v) {
      alloc.Give((coloring[v] + copy) % k, red.original[copy][v]);
    }
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      alloc.Give((edge_agent[e] + copy) % k, red.edge_vertex[copy][e]);
    }
  }
  return alloc;
}

}  // namespace fdag
