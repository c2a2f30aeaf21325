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

// Bipartite matching, bottleneck k-cardinality matching and integral
// maximum flow. All routines are deterministic: adjacency is scanned in
// insertion order and augmenting searches start from the lowest index.

#ifndef FDAG_MATCHING_H_
#define FDAG_MATCHING_H_

#include <cstdint>
#include <optional>
#include <vector>

namespace fdag {

class BipartiteGraph {
 public:
  BipartiteGraph(int left, int right) : right_(right), adj_(left) {}

  void AddEdge(int l, int r) { adj_[l].push_back(r); }

  int left_size() const { return static_cast<int>(adj_.size()); }
  int right_size() const { return right_; }
  const std::vector<int>& neighbors(int l) const { return adj_[l]; }

 private:
  int right_;
  std::vector<std::vector<int>> adj_;
};

struct BipartiteMatching {
  static constexpr int kUnmatched = -1;

  int size = 0;
  std::vector<int> mate_left;   // left -> right or kUnmatched
  std::vector<int> mate_right;  // right -> left or kUnmatched
};

// Hopcroft-Karp.
BipartiteMatching MaxBipartiteMatching(const BipartiteGraph& g);

struct VertexCover {
  std::vector<bool> left;
  std::vector<bool> right;
};

// Koenig: minimum vertex cover from a maximum matching, via alternating
// reachability from unmatched left vertices.
VertexCover MinVertexCover(const BipartiteGraph& g,
                           const BipartiteMatching& matching);

struct WeightedEdge {
  int left;
  int right;
  std::int64_t weight;
};

struct WeightedBipartiteGraph {
  int left = 0;
  int right = 0;
  std::vector<WeightedEdge> edges;
};

struct BottleneckMatching {
  std::int64_t bottleneck = 0;
  std::vector<WeightedEdge> edges;
};

// Cardinality-k matching minimising the largest edge weight, by binary
// search over distinct weights with a maximum matching per threshold.
// std::nullopt when no matching of size k exists. k == 0 yields an empty
// matching with bottleneck 0.
std::optional<BottleneckMatching> BottleneckKMatching(
    const WeightedBipartiteGraph& g, int k);

class FlowNetwork {
 public:
  // Replaced at solve time by one more than the sum of all finite
  // capacities, which exceeds every finite cut.
  static constexpr std::int64_t kUnbounded = -1;

  FlowNetwork(int nodes, int source, int sink)
      : nodes_(nodes), source_(source), sink_(sink) {}

  // Returns the arc index used in FlowResult::arc_flow.
  int AddArc(int from, int to, std::int64_t capacity);

  struct ArcSpec {
    int from;
    int to;
    std::int64_t capacity;
  };

  int nodes() const { return nodes_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<ArcSpec>& arcs() const { return arcs_; }

 private:
  int nodes_;
  int source_;
  int sink_;
  std::vector<ArcSpec> arcs_;
};

struct FlowResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> arc_flow;
  // Nodes reachable from the source in the final residual graph.
  std::vector<bool> source_side;
};

// Dinic's algorithm (shortest augmenting paths in phases).
FlowResult MaxFlow(const FlowNetwork& net);

}  // namespace fdag

#endif  // FDAG_MATCHING_H_
