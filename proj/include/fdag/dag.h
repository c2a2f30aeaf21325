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

// Preference graphs: validated DAGs over items with a precomputed
// reachability index, plus the order-theoretic primitives every solver
// builds on (sources, antichains, width, chain partitions, depth).

#ifndef FDAG_DAG_H_
#define FDAG_DAG_H_

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fdag {

using Vertex = int;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

struct Arc {
  Vertex tail;
  Vertex head;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Immutable after construction. Vertex ids are dense in [0, size()).
class PreferenceGraph {
 public:
  PreferenceGraph() = default;

  // Throws Error with kInvalidVertex, kDuplicateArc (loops included) or
  // kCycleDetected; the latter carries a witnessing cycle.
  static PreferenceGraph Build(int n, std::span<const Arc> arcs);

  int size() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  std::span<const Vertex> out(Vertex v) const { return out_adj_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_adj_[v]; }
  bool has_arc(Vertex u, Vertex v) const;

  const std::vector<Vertex>& topo_order() const { return topo_; }
  // Position of v in topo_order().
  int topo_index(Vertex v) const { return topo_pos_[v]; }

  // succ[v]: v together with everything reachable from v.
  const VertexSet& reach(Vertex v) const { return reach_[v]; }
  // pred[v]: v together with everything that reaches v.
  const VertexSet& pred(Vertex v) const { return pred_[v]; }
  bool reaches(Vertex from, Vertex to) const { return reach_[from].test(to); }
  bool comparable(Vertex a, Vertex b) const {
    return reaches(a, b) || reaches(b, a);
  }

  VertexSet EmptySet() const { return VertexSet(n_); }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_adj_;
  std::vector<std::vector<Vertex>> in_adj_;
  std::vector<Vertex> topo_;
  std::vector<int> topo_pos_;
  std::vector<VertexSet> reach_;
  std::vector<VertexSet> pred_;
};

// Vertices with in-degree 0, ascending.
std::vector<Vertex> Sources(const PreferenceGraph& g);

bool IsAntichain(const PreferenceGraph& g, std::span<const Vertex> s);

// Union of succ[v] over the given vertices.
VertexSet Dominated(const PreferenceGraph& g, std::span<const Vertex> items);

struct WidthCertificate {
  int width = 0;
  // Each chain is listed in reachability order (every element reaches the
  // next one).
  std::vector<std::vector<Vertex>> chains;
  std::vector<Vertex> antichain_witness;
};

// Minimum chain partition through maximum matching on the split graph of
// the transitive closure; the antichain comes from the Koenig cover.
WidthCertificate ComputeWidth(const PreferenceGraph& g);

// Number of vertices on the maximal path ending at v. Throws kNotAForest if
// any vertex has in-degree > 1.
int Depth(const PreferenceGraph& g, Vertex v);
std::vector<int> Depths(const PreferenceGraph& g);

bool IsEdgeless(const PreferenceGraph& g);
// Every vertex has exactly one incident arc.
bool IsDirectedMatching(const PreferenceGraph& g);
// Disjoint union of out-stars; isolated vertices count as trivial stars.
bool IsOutStarCollection(const PreferenceGraph& g);
bool IsOutForest(const PreferenceGraph& g);

struct ShapeTags {
  bool edgeless = false;
  bool directed_matching = false;
  bool out_star_collection = false;
  bool out_forest = false;
  bool width_le_2 = false;
  // Set when none of the forest-family tags applies.
  bool general = false;
  int width = 0;

  std::vector<std::string> Names() const;
};

ShapeTags ClassifyShape(const PreferenceGraph& g);

}  // namespace fdag

#endif  // FDAG_DAG_H_
