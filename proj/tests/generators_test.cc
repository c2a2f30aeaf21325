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

#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <vector>

#include "fdag/error.h"
#include "fdag/io.h"
#include "fdag/model.h"
#include "fdag/modular.h"
#include "fdag/oracle.h"
#include "fdag/structured.h"
#include "test_util.h"

namespace fdag {
namespace {

std::string Serialize(const PreferenceGraph& g) {
  std::ostringstream out;
  WriteInstance(out, MakeInstance(g, 1));
  return out.str();
}

TEST(RandomDag, Examples) {
  EXPECT_EQ(RandomDag(5, 0.0, 1).arc_count(), 0);
  const PreferenceGraph t = RandomDag(3, 1.0, 1);
  EXPECT_EQ(t.arc_count(), 3);
  EXPECT_EQ(ComputeWidth(t).width, 1);
  EXPECT_EQ(RandomDag(10, 0.3, 42).size(), 10);
}

TEST(Generators, DeterministicPerSeed) {
  for (std::uint64_t seed : {1u, 7u, 99u}) {
    EXPECT_EQ(Serialize(RandomDag(20, 0.2, seed)),
              Serialize(RandomDag(20, 0.2, seed)));
    EXPECT_EQ(Serialize(RandomOutForest(20, 0.2, seed)),
              Serialize(RandomOutForest(20, 0.2, seed)));
    EXPECT_EQ(Serialize(WidthTwo(20, seed)), Serialize(WidthTwo(20, seed)));
  }
  EXPECT_NE(Serialize(RandomDag(20, 0.3, 1)), Serialize(RandomDag(20, 0.3, 2)));
}

TEST(Generators, SeedStreamIsStable) {
  // Pins the engine so that instance files stay reproducible.
  SeededRng rng(2026);
  const std::uint64_t a = rng.Below(1000000);
  const std::uint64_t b = rng.Below(1000000);
  std::mt19937_64 ref(2026);
  EXPECT_EQ(a, ref() % 1000000);
  EXPECT_EQ(b, ref() % 1000000);
}

TEST(OutStars, Examples) {
  const PreferenceGraph g = OutStars({10, 1, 1, 1}, 0);
  EXPECT_EQ(g.size(), 17);
  EXPECT_EQ(Sources(g).size(), 4u);
  EXPECT_EQ(OutStars({1}, 0).arc_count(), 1);
  const PreferenceGraph iso = OutStars({}, 3);
  EXPECT_EQ(iso.size(), 3);
  EXPECT_EQ(iso.arc_count(), 0);
}

TEST(DirectedMatching, Examples) {
  const PreferenceGraph one = DirectedMatching(1);
  ASSERT_EQ(one.arc_count(), 1);
  EXPECT_TRUE(one.has_arc(0, 1));
  EXPECT_EQ(DirectedMatching(0).size(), 0);
  const PreferenceGraph three = DirectedMatching(3);
  EXPECT_EQ(three.size(), 6);
  EXPECT_TRUE(ClassifyShape(three).directed_matching);
}

TEST(RandomOutForest, IsAForest) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_TRUE(IsOutForest(RandomOutForest(1 + seed % 25, 0.3, seed)));
  }
}

TEST(WidthTwo, CertifiedAndFigureShape) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const PreferenceGraph g = WidthTwo(2 + seed % 29, seed);
    EXPECT_LE(ComputeWidth(g).width, 2);
  }
  const PreferenceGraph fig = WidthTwoFigure();
  EXPECT_EQ(fig.size(), 14);
  EXPECT_EQ(fig.arc_count(), 7 + 5 + 6);
  EXPECT_EQ(ComputeWidth(fig).width, 2);
}

TEST(ModuleBlowup, BuildsModules) {
  const PreferenceGraph g = ModuleBlowup({{true, 3}, {false, 2}}, {{0, 1}});
  EXPECT_EQ(g.size(), 5);
  // Path 0->1->2 plus 3 * 2 cross arcs.
  EXPECT_EQ(g.arc_count(), 2 + 6);
  const std::vector<Vertex> top = {0, 1, 2};
  const std::vector<Vertex> bottom = {3, 4};
  EXPECT_TRUE(InducedPathOrder(g, top).has_value());
  EXPECT_TRUE(InducesIndependentSet(g, bottom));
  EXPECT_TRUE(IsModule(g, top));
  EXPECT_TRUE(IsModule(g, bottom));
}

TEST(ThreePaths, SmallCasesMatchOracle) {
  const int expected[] = {0, 0, 2, 3};
  for (int k = 1; k <= 3; ++k) {
    const ThreePaths tp = MakeThreePaths(k);
    EXPECT_EQ(tp.instance.items(), 3 * k);
    EXPECT_EQ(tp.expected_optimum, expected[k]);
    EXPECT_EQ(BruteForceOptimum(tp.instance).optimum, tp.expected_optimum);
    EXPECT_EQ(MaxDissatisfaction(ComputeProfile(tp.instance, tp.construction)),
              tp.expected_optimum);
  }
  const ThreePaths two = MakeThreePaths(2);
  EXPECT_EQ(SolveTwoAgents(two.instance).optimum, 2);
}

TEST(ThreePaths, ConstructionMeetsFormula) {
  for (int k = 1; k <= 12; ++k) {
    const ThreePaths tp = MakeThreePaths(k);
    EXPECT_EQ(tp.expected_optimum, (3 * (k - 1) + 1) / 2);
    EXPECT_EQ(MaxDissatisfaction(ComputeProfile(tp.instance, tp.construction)),
              tp.expected_optimum)
        << "k " << k;
    for (const auto& b : tp.construction.bundles) EXPECT_EQ(b.size(), 3u);
  }
}

TEST(ReduceColoring, Examples) {
  const ColoringReduction tri =
      ReduceColoring(UndirectedGraph{3, {{0, 1}, {1, 2}, {0, 2}}}, 3);
  EXPECT_EQ(tri.diss, 6);
  EXPECT_EQ(tri.instance.items(), 18);
  ASSERT_TRUE(tri.instance.threshold);
  EXPECT_EQ(*tri.instance.threshold, 6);

  const ColoringReduction edge =
      ReduceColoring(UndirectedGraph{2, {{0, 1}}}, 3);
  EXPECT_EQ(edge.diss, 4);
  EXPECT_EQ(edge.instance.items(), 9);

  const auto profile =
      ComputeProfile(tri.instance, ColoringToAllocation(tri, {0, 1, 2}));
  for (int d : profile) EXPECT_EQ(d, 6);
  const auto edge_profile =
      ComputeProfile(edge.instance, ColoringToAllocation(edge, {0, 1}));
  for (int d : edge_profile) EXPECT_EQ(d, 4);

  EXPECT_THROW(ColoringToAllocation(tri, {0, 0, 1}), Error);
  EXPECT_THROW(ReduceColoring(UndirectedGraph{2, {{0, 1}}}, 2), Error);
}

TEST(ReduceColoring, OutputShape) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    SeededRng rng(seed);
    UndirectedGraph h;
    h.n = rng.Between(1, 6);
    std::set<std::pair<int, int>> seen;
    for (int u = 0; u < h.n; ++u) {
      for (int v = u + 1; v < h.n; ++v) {
        if (rng.Chance(0.5)) h.edges.emplace_back(u, v);
      }
    }
    const int k = rng.Between(3, 4);
    const ColoringReduction red = ReduceColoring(h, k);
    const PreferenceGraph& g = red.instance.graph;
    int reach_total = 0;
    for (int v = 0; v < g.size(); ++v) {
      EXPECT_LE(g.in(v).size(), 2u);
      for (Vertex w : g.out(v)) EXPECT_TRUE(g.out(w).empty());
    }
    for (int v = 0; v < h.n; ++v) {
      reach_total += static_cast<int>(g.reach(red.original[0][v]).count());
    }
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      reach_total += static_cast<int>(g.reach(red.edge_vertex[0][e]).count());
    }
    EXPECT_EQ(red.diss,
              k * (h.n + static_cast<int>(h.edges.size())) - reach_total);
  }
}

}  // namespace
}  // namespace fdag
