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

// Seeded instance generators. Randomness comes from std::mt19937_64 with
// hand-rolled range mapping so a seed yields the same graph on every
// standard library.

#ifndef FDAG_GENERATORS_H_
#define FDAG_GENERATORS_H_

#include <cstdint>
#include <random>
#include <vector>

#include "fdag/dag.h"
#include "fdag/model.h"

namespace fdag {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t Below(std::uint64_t bound) { return engine_() % bound; }
  int Between(int lo, int hi) {  // inclusive
    return lo +
           static_cast<int>(Below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  // Uniform in [0, 1) with 53 random bits.
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool Chance(double p) { return Unit() < p; }
  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Shuffled topological order, each forward pair kept with probability p.
PreferenceGraph RandomDag(int n, double arc_probability, std::uint64_t seed);

// Stars first (root, then its leaves), isolated vertices last.
PreferenceGraph OutStars(const std::vector<int>& leaf_counts,
                         int singleton_count);

PreferenceGraph DirectedMatching(int edge_count);

// Random out-forest: each vertex picks a parent among earlier vertices or
// becomes a root with probability root_probability.
PreferenceGraph RandomOutForest(int n, double root_probability,
                                std::uint64_t seed);

// Two chains with random cross arcs, certified to have width <= 2.
PreferenceGraph WidthTwo(int n, std::uint64_t seed);

// Fixed width-two graph: chains 0..7 and 8..13 with six cross arcs.
PreferenceGraph WidthTwoFigure();

struct ModuleSpec {
  bool path = false;
  int size = 1;
};

// Substitutes each quotient vertex with a path or an independent set.
// Quotient arcs become complete bipartite connections between modules.
PreferenceGraph ModuleBlowup(const std::vector<ModuleSpec>& modules,
                             const std::vector<Arc>& quotient_arcs);

struct ThreePaths {
  Instance instance;
  // ceil(3(k-1)/2), reached by `construction`.
  int expected_optimum = 0;
  Allocation construction;
};

// Three disjoint directed paths of k vertices each, for k agents. Path p
// occupies vertices [p*k, (p+1)*k) from the top down.
ThreePaths MakeThreePaths(int k);

struct UndirectedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

struct ColoringReduction {
  UndirectedGraph source;
  int k = 0;
  // Graph on k copies of the subdivided source, with threshold diss.
  Instance instance;
  int diss = 0;
  // original[c][v]: copy c of source vertex v.
  std::vector<std::vector<Vertex>> original;
  // edge_vertex[c][e]: copy c of the subdivision vertex of edge e.
  std::vector<std::vector<Vertex>> edge_vertex;
};

// Originals come first (copy-major), then subdivision vertices
// (copy-major). Throws kInvalidK for k < 3, kInvalidArgument for loops or
// repeated edges.
ColoringReduction ReduceColoring(const UndirectedGraph& h, int k);

// The cycled allocation built from a proper k-colouring of the source.
// Throws kImproperColoring.
Allocation ColoringToAllocation(const ColoringReduction& reduction,
                                const std::vector<int>& coloring);

}  // namespace fdag

#endif  // FDAG_GENERATORS_H_
