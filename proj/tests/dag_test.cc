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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fdag/error.h"
#include "fdag/generators.h"
#include "test_util.h"

namespace fdag {
namespace {

using testing::BfsReach;
using testing::Chain;
using testing::Edgeless;
using testing::Graph;

std::vector<Vertex> Members(const VertexSet& s) {
  std::vector<Vertex> out;
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

bool HasTag(const ShapeTags& t, const std::string& name) {
  const auto names = t.Names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

TEST(BuildDag, OutStarHasTopoOrderAndReach) {
  const PreferenceGraph g = Graph(3, {{0, 1}, {0, 2}});
  EXPECT_EQ(g.topo_order(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(Members(g.reach(0)), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(Members(g.pred(2)), (std::vector<Vertex>{0, 2}));
}

TEST(BuildDag, RejectsTwoCycleWithWitness) {
  try {
    Graph(2, {{0, 1}, {1, 0}});
    FAIL() << "cycle accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCycleDetected);
    std::vector<int> w = e.witness();
    std::sort(w.begin(), w.end());
    EXPECT_EQ(w, (std::vector<int>{0, 1}));
  }
}

TEST(BuildDag, LongerCycleWitnessIsACycle) {
  try {
    Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {3, 4}});
    FAIL() << "cycle accepted";
  } catch (const Error& e) {
    ASSERT_EQ(e.code(), ErrorCode::kCycleDetected);
    const auto& w = e.witness();
    ASSERT_GE(w.size(), 2u);
    const PreferenceGraph dag = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    std::set<std::pair<int, int>> arcs = {
        {0, 1}, {1, 2}, {2, 3}, {3, 1}, {3, 4}};
    for (std::size_t i = 0; i < w.size(); ++i) {
      EXPECT_TRUE(arcs.count({w[i], w[(i + 1) % w.size()]}))
          << w[i] << "->" << w[(i + 1) % w.size()];
    }
  }
}

TEST(BuildDag, SingleVertex) {
  const PreferenceGraph g = Graph(1, {});
  EXPECT_EQ(Members(g.reach(0)), (std::vector<Vertex>{0}));
}

TEST(BuildDag, RejectsBadInput) {
  EXPECT_THROW(
      try { Graph(2, {{0, 2}}); } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kInvalidVertex);
        throw;
      },
      Error);
  EXPECT_THROW(
      try { Graph(2, {{0, 1}, {0, 1}}); } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kDuplicateArc);
        throw;
      },
      Error);
  EXPECT_THROW(Graph(2, {{1, 1}}), Error);
}

TEST(BuildDag, ReachMatchesBfsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 30);
    const PreferenceGraph g = RandomDag(n, 0.15, seed);
    for (int v = 0; v < n; ++v) {
      ASSERT_EQ(Members(g.reach(v)), BfsReach(g, v)) << "seed " << seed;
      for (int u = 0; u < n; ++u) {
        ASSERT_EQ(g.reach(v).test(u), g.pred(u).test(v));
      }
    }
    for (const Arc& a : g.arcs()) {
      ASSERT_LT(g.topo_index(a.tail), g.topo_index(a.head));
    }
  }
}

TEST(Sources, Examples) {
  EXPECT_EQ(Sources(Graph(3, {{0, 1}, {0, 2}})), (std::vector<Vertex>{0}));
  EXPECT_EQ(Sources(Graph(4, {{0, 1}, {2, 3}})), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(Sources(Edgeless(4)), (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(IsAntichain, Examples) {
  const std::vector<Vertex> s02 = {0, 2};
  EXPECT_FALSE(IsAntichain(Chain(3), s02));
  EXPECT_TRUE(IsAntichain(Graph(4, {{0, 1}, {2, 3}}), s02));
  EXPECT_TRUE(IsAntichain(Chain(3), std::vector<Vertex>{}));
}

TEST(Width, Examples) {
  const WidthCertificate chain = ComputeWidth(Chain(3));
  EXPECT_EQ(chain.width, 1);
  ASSERT_EQ(chain.chains.size(), 1u);
  EXPECT_EQ(chain.chains[0], (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(ComputeWidth(Edgeless(4)).width, 4);
  const PreferenceGraph fig = WidthTwoFigure();
  EXPECT_EQ(ComputeWidth(fig).width, 2);
  EXPECT_EQ(testing::BruteForceWidth(fig), 2);
  EXPECT_EQ(ComputeWidth(Graph(0, {})).width, 0);
}

void CheckCertificate(const PreferenceGraph& g, const WidthCertificate& c) {
  ASSERT_EQ(static_cast<int>(c.chains.size()), c.width);
  ASSERT_EQ(static_cast<int>(c.antichain_witness.size()), c.width);
  EXPECT_TRUE(IsAntichain(g, c.antichain_witness));
  std::vector<int> seen(g.size(), 0);
  for (const auto& chain : c.chains) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      ++seen[chain[i]];
      if (i + 1 < chain.size()) EXPECT_TRUE(g.reaches(chain[i], chain[i + 1]));
    }
  }
  for (int v = 0; v < g.size(); ++v) EXPECT_EQ(seen[v], 1) << v;
}

TEST(Width, MatchesBruteForceAntichain) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 1 + static_cast<int>(seed % 14);
    const double p = 0.05 + 0.1 * static_cast<double>(seed % 5);
    const PreferenceGraph g = RandomDag(n, p, seed);
    const WidthCertificate c = ComputeWidth(g);
    ASSERT_EQ(c.width, testing::BruteForceWidth(g)) << "seed " << seed;
    CheckCertificate(g, c);
  }
}

TEST(Depth, Examples) {
  const PreferenceGraph star = Graph(3, {{0, 1}, {0, 2}});
  EXPECT_EQ(Depth(star, 0), 1);
  EXPECT_EQ(Depth(star, 1), 2);
  EXPECT_EQ(Depth(Chain(3), 2), 3);
  EXPECT_THROW(Depth(Graph(3, {{0, 2}, {1, 2}}), 2), Error);
}

TEST(ClassifyShape, Examples) {
  const ShapeTags m = ClassifyShape(Graph(4, {{0, 1}, {2, 3}}));
  EXPECT_TRUE(HasTag(m, "directed_matching"));
  EXPECT_TRUE(HasTag(m, "out_star_collection"));
  EXPECT_TRUE(HasTag(m, "out_forest"));
  EXPECT_FALSE(HasTag(m, "general"));

  const ShapeTags c = ClassifyShape(Chain(3));
  EXPECT_TRUE(HasTag(c, "out_forest"));
  EXPECT_TRUE(HasTag(c, "width_le_2"));
  EXPECT_FALSE(HasTag(c, "out_star_collection"));
  EXPECT_FALSE(HasTag(c, "directed_matching"));

  UndirectedGraph triangle{3, {{0, 1}, {1, 2}, {0, 2}}};
  const ColoringReduction red = ReduceColoring(triangle, 3);
  const ShapeTags t = ClassifyShape(red.instance.graph);
  EXPECT_TRUE(HasTag(t, "general"));
  EXPECT_EQ(t.width, testing::BruteForceWidth(red.instance.graph));
  EXPECT_EQ(t.width_le_2, t.width <= 2);
}

void CheckImplications(const PreferenceGraph& g) {
  const ShapeTags t = ClassifyShape(g);
  if (t.edgeless) {
    EXPECT_TRUE(t.out_star_collection);
  }
  if (t.directed_matching) {
    EXPECT_TRUE(t.out_star_collection);
  }
  if (t.out_star_collection) {
    EXPECT_TRUE(t.out_forest);
  }
  EXPECT_EQ(t.general, !t.out_forest);
  EXPECT_EQ(t.width_le_2, t.width <= 2);
}

TEST(ClassifyShape, ImplicationsHoldPerGeneratorFamily) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SeededRng rng(seed);
    std::vector<int> leaves(rng.Between(0, 5));
    for (int& l : leaves) l = rng.Between(1, 4);
    const PreferenceGraph stars = OutStars(leaves, rng.Between(0, 3));
    EXPECT_TRUE(ClassifyShape(stars).out_star_collection);
    CheckImplications(stars);

    const PreferenceGraph matching = DirectedMatching(rng.Between(1, 6));
    EXPECT_TRUE(ClassifyShape(matching).directed_matching);
    CheckImplications(matching);

    const PreferenceGraph forest =
        RandomOutForest(rng.Between(1, 20), 0.2, seed);
    EXPECT_TRUE(ClassifyShape(forest).out_forest);
    CheckImplications(forest);

    const PreferenceGraph w2 = WidthTwo(rng.Between(2, 20), seed);
    EXPECT_TRUE(ClassifyShape(w2).width_le_2);
    CheckImplications(w2);

    const PreferenceGraph edgeless = RandomDag(rng.Between(1, 8), 0.0, seed);
    EXPECT_TRUE(ClassifyShape(edgeless).edgeless);
    CheckImplications(edgeless);

    CheckImplications(RandomDag(rng.Between(1, 20), 0.2, seed));
  }
}

}  // namespace
}  // namespace fdag
