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

#include "fdag/matching.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "fdag/generators.h"

namespace fdag {
namespace {

int BruteForceMatching(const BipartiteGraph& g) {
  std::vector<bool> used(g.right_size(), false);
  std::function<int(int)> rec = [&](int l) -> int {
    if (l == g.left_size()) return 0;
    int best = rec(l + 1);
    for (int r : g.neighbors(l)) {
      if (used[r]) continue;
      used[r] = true;
      best = std::max(best, 1 + rec(l + 1));
      used[r] = false;
    }
    return best;
  };
  return rec(0);
}

// Smallest achievable maximum weight over matchings of exactly k edges, or
// -1 when none exists.
std::int64_t BruteForceBottleneck(const WeightedBipartiteGraph& g, int k) {
  std::vector<bool> used_l(g.left, false), used_r(g.right, false);
  std::int64_t best = -1;
  std::function<void(std::size_t, int, std::int64_t)> rec =
      [&](std::size_t i, int taken, std::int64_t worst) {
        if (taken == k) {
          if (best < 0 || worst < best) best = worst;
          return;
        }
        if (i == g.edges.size()) return;
        rec(i + 1, taken, worst);
        const WeightedEdge& e = g.edges[i];
        if (used_l[e.left] || used_r[e.right]) return;
        used_l[e.left] = used_r[e.right] = true;
        rec(i + 1, taken + 1, std::max(worst, e.weight));
        used_l[e.left] = used_r[e.right] = false;
      };
  rec(0, 0, 0);
  return best;
}

TEST(MaxBipartiteMatching, Examples) {
  BipartiteGraph k22(2, 2);
  for (int l = 0; l < 2; ++l) {
    for (int r = 0; r < 2; ++r) k22.AddEdge(l, r);
  }
  EXPECT_EQ(MaxBipartiteMatching(k22).size, 2);
  EXPECT_EQ(MaxBipartiteMatching(BipartiteGraph(3, 3)).size, 0);
  BipartiteGraph path(2, 1);  // a1 - b1 - a2
  path.AddEdge(0, 0);
  path.AddEdge(1, 0);
  EXPECT_EQ(MaxBipartiteMatching(path).size, 1);
}

TEST(MaxBipartiteMatching, MatchesBruteForceAndKoenig) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SeededRng rng(seed);
    const int left = rng.Between(0, 7);
    const int right = rng.Between(0, 7);
    BipartiteGraph g(left, right);
    for (int l = 0; l < left; ++l) {
      for (int r = 0; r < right; ++r) {
        if (rng.Chance(0.3)) g.AddEdge(l, r);
      }
    }
    const BipartiteMatching m = MaxBipartiteMatching(g);
    ASSERT_EQ(m.size, BruteForceMatching(g)) << "seed " << seed;
    int pairs = 0;
    for (int l = 0; l < left; ++l) {
      if (m.mate_left[l] == BipartiteMatching::kUnmatched) continue;
      ++pairs;
      EXPECT_EQ(m.mate_right[m.mate_left[l]], l);
      const auto& nb = g.neighbors(l);
      EXPECT_NE(std::find(nb.begin(), nb.end(), m.mate_left[l]), nb.end());
    }
    EXPECT_EQ(pairs, m.size);

    const VertexCover c = MinVertexCover(g, m);
    int cover = 0;
    for (bool b : c.left) cover += b;
    for (bool b : c.right) cover += b;
    EXPECT_EQ(cover, m.size);
    for (int l = 0; l < left; ++l) {
      for (int r : g.neighbors(l)) EXPECT_TRUE(c.left[l] || c.right[r]);
    }
  }
}

TEST(BottleneckKMatching, Examples) {
  WeightedBipartiteGraph forced{2, 2, {{0, 0, 5}, {1, 1, 3}}};
  auto m = BottleneckKMatching(forced, 2);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->bottleneck, 5);

  WeightedBipartiteGraph g{2, 2, {{0, 0, 5}, {0, 1, 1}, {1, 0, 2}, {1, 1, 9}}};
  m = BottleneckKMatching(g, 2);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->bottleneck, 2);
  ASSERT_EQ(m->edges.size(), 2u);
  for (const auto& e : m->edges) EXPECT_NE(e.left, e.right);

  m = BottleneckKMatching(g, 0);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->bottleneck, 0);
  EXPECT_TRUE(m->edges.empty());

  EXPECT_FALSE(BottleneckKMatching(g, 3));
}

TEST(BottleneckKMatching, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SeededRng rng(seed);
    WeightedBipartiteGraph g;
    g.left = rng.Between(1, 5);
    g.right = rng.Between(1, 5);
    for (int l = 0; l < g.left; ++l) {
      for (int r = 0; r < g.right; ++r) {
        if (rng.Chance(0.5)) {
          g.edges.push_back({l, r, static_cast<std::int64_t>(rng.Below(10))});
        }
      }
    }
    for (int k = 0; k <= 5; ++k) {
      const auto m = BottleneckKMatching(g, k);
      const std::int64_t expect = BruteForceBottleneck(g, k);
      if (expect < 0) {
        EXPECT_FALSE(m) << "seed " << seed << " k " << k;
        continue;
      }
      ASSERT_TRUE(m) << "seed " << seed << " k " << k;
      EXPECT_EQ(m->bottleneck, expect);
      ASSERT_EQ(static_cast<int>(m->edges.size()), k);
      std::int64_t worst = 0;
      std::vector<bool> ul(g.left, false), ur(g.right, false);
      for (const auto& e : m->edges) {
        EXPECT_FALSE(ul[e.left] || ur[e.right]);
        ul[e.left] = ur[e.right] = true;
        worst = std::max(worst, e.weight);
      }
      EXPECT_EQ(worst, m->bottleneck);
    }
  }
}

TEST(MaxFlow, Examples) {
  FlowNetwork a(3, 0, 2);
  a.AddArc(0, 1, 2);
  a.AddArc(1, 2, 1);
  EXPECT_EQ(MaxFlow(a).value, 1);

  FlowNetwork b(2, 0, 1);
  EXPECT_EQ(MaxFlow(b).value, 0);
}

TEST(MaxFlow, EqualsMinCutAndConserves) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SeededRng rng(seed);
    const int nodes = rng.Between(2, 8);
    FlowNetwork net(nodes, 0, nodes - 1);
    for (int u = 0; u < nodes; ++u) {
      for (int v = 0; v < nodes; ++v) {
        if (u != v && rng.Chance(0.35)) {
          net.AddArc(
              u, v,
              rng.Chance(0.1) ? FlowNetwork::kUnbounded : rng.Between(0, 6));
        }
      }
    }
    const FlowResult f = MaxFlow(net);

    // Brute-force minimum cut over every source side (inner nodes only).
    std::int64_t finite_total = 0;
    for (const auto& arc : net.arcs()) {
      if (arc.capacity != FlowNetwork::kUnbounded) finite_total += arc.capacity;
    }
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    const int inner = nodes - 2;
    for (int mask = 0; mask < (1 << inner); ++mask) {
      auto side = [&](int v) {
        return v == 0 || (v != nodes - 1 && (mask >> (v - 1) & 1));
      };
      std::int64_t cut = 0;
      for (const auto& arc : net.arcs()) {
        if (side(arc.from) && !side(arc.to)) {
          cut += arc.capacity == FlowNetwork::kUnbounded ? finite_total + 1
                                                         : arc.capacity;
        }
      }
      best = std::min(best, cut);
    }
    EXPECT_EQ(f.value, best) << "seed " << seed;

    std::vector<std::int64_t> balance(nodes, 0);
    for (std::size_t i = 0; i < net.arcs().size(); ++i) {
      const auto& arc = net.arcs()[i];
      EXPECT_GE(f.arc_flow[i], 0);
      if (arc.capacity != FlowNetwork::kUnbounded) {
        EXPECT_LE(f.arc_flow[i], arc.capacity);
      }
      balance[arc.from] -= f.arc_flow[i];
      balance[arc.to] += f.arc_flow[i];
    }
    for (int v = 1; v + 1 < nodes; ++v) EXPECT_EQ(balance[v], 0);
    EXPECT_EQ(balance[nodes - 1], f.value);
    EXPECT_TRUE(f.source_side[0]);
    EXPECT_FALSE(f.source_side[nodes - 1]);
  }
}

}  // namespace
}  // namespace fdag
