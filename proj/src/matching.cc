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

#include <algorithm>
#include <limits>
#include <queue>

#include "fdag/error.h"

namespace fdag {
namespace {

constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g), dist_(g.left_size()), next_edge_(g.left_size()) {
    m_.mate_left.assign(g.left_size(), BipartiteMatching::kUnmatched);
    m_.mate_right.assign(g.right_size(), BipartiteMatching::kUnmatched);
  }

  BipartiteMatching Run() {
    while (Bfs()) {
      std::fill(next_edge_.begin(), next_edge_.end(), 0);
      for (int l = 0; l < g_.left_size(); ++l) {
        if (m_.mate_left[l] == BipartiteMatching::kUnmatched && Dfs(l)) {
          ++m_.size;
        }
      }
    }
    return std::move(m_);
  }

 private:
  // Layers free left vertices at distance 0; returns whether some free
  // right vertex is reachable.
  bool Bfs() {
    std::queue<int> queue;
    for (int l = 0; l < g_.left_size(); ++l) {
      if (m_.mate_left[l] == BipartiteMatching::kUnmatched) {
        dist_[l] = 0;
        queue.push(l);
      } else {
        dist_[l] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const int l = queue.front();
      queue.pop();
      for (int r : g_.neighbors(l)) {
        const int next = m_.mate_right[r];
        if (next == BipartiteMatching::kUnmatched) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[l] + 1;
          queue.push(next);
        }
      }
    }
    return found;
  }

  bool Dfs(int l) {
    const auto& adj = g_.neighbors(l);
    for (int& i = next_edge_[l]; i < static_cast<int>(adj.size()); ++i) {
      const int r = adj[i];
      const int next = m_.mate_right[r];
      if (next == BipartiteMatching::kUnmatched ||
          (dist_[next] == dist_[l] + 1 && Dfs(next))) {
        m_.mate_left[l] = r;
        m_.mate_right[r] = l;
        return true;
      }
    }
    dist_[l] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  BipartiteMatching m_;
  std::vector<int> dist_;
  std::vector<int> next_edge_;
};

}  // namespace

BipartiteMatching MaxBipartiteMatching(const BipartiteGraph& g) {
  return HopcroftKarp(g).Run();
}

VertexCover MinVertexCover(const BipartiteGraph& g,
                           const BipartiteMatching& matching) {
  std::vector<bool> left_seen(g.left_size(), false);
  std::vector<bool> right_seen(g.right_size(), false);
  std::queue<int> queue;
  for (int l = 0; l < g.left_size(); ++l) {
    if (matching.mate_left[l] == BipartiteMatching::kUnmatched) {
      left_seen[l] = true;
      queue.push(l);
    }
  }
  while (!queue.empty()) {
    const int l = queue.front();
    queue.pop();
    for (int r : g.neighbors(l)) {
      if (right_seen[r] || matching.mate_left[l] == r) continue;
      right_seen[r] = true;
      const int next = matching.mate_right[r];
      if (next != BipartiteMatching::kUnmatched && !left_seen[next]) {
        left_seen[next] = true;
        queue.push(next);
      }
    }
  }
  VertexCover cover;
  cover.left.resize(g.left_size());
  cover.right = right_seen;
  for (int l = 0; l < g.left_size(); ++l) cover.left[l] = !left_seen[l];
  return cover;
}

std::optional<BottleneckMatching> BottleneckKMatching(
    const WeightedBipartiteGraph& g, int k) {
  if (k < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative matching cardinality");
  }
  if (k == 0) return BottleneckMatching{};

  std::vector<std::int64_t> weights;
  weights.reserve(g.edges.size());
  for (const auto& e : g.edges) weights.push_back(e.weight);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());

  auto match_below = [&](std::int64_t threshold) {
    BipartiteGraph sub(g.left, g.right);
    for (const auto& e : g.edges) {
      if (e.weight <= threshold) sub.AddEdge(e.left, e.right);
    }
    return MaxBipartiteMatching(sub);
  };

  if (weights.empty() || match_below(weights.back()).size < k) {
    return std::nullopt;
  }
  int lo = 0;
  int hi = static_cast<int>(weights.size()) - 1;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (match_below(weights[mid]).size >= k) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }

  const std::int64_t threshold = weights[lo];
  BipartiteMatching full = match_below(threshold);
  BottleneckMatching result;
  // Keep the first k matched pairs by left index. A sub-matching of a
  // matching is still a matching, so dropping the surplus is safe.
  for (int l = 0; l < g.left && static_cast<int>(result.edges.size()) < k;
       ++l) {
    const int r = full.mate_left[l];
    if (r == BipartiteMatching::kUnmatched) continue;
    std::int64_t w = std::numeric_limits<std::int64_t>::max();
    for (const auto& e : g.edges) {
      if (e.left == l && e.right == r && e.weight <= threshold) {
        w = std::min(w, e.weight);
      }
    }
    result.edges.push_back({l, r, w});
    result.bottleneck = std::max(result.bottleneck, w);
  }
  return result;
}

int FlowNetwork::AddArc(int from, int to, std::int64_t capacity) {
  if (from < 0 || from >= nodes_ || to < 0 || to >= nodes_) {
    throw Error(ErrorCode::kInvalidArgument, "flow arc endpoint out of range");
  }
  if (capacity < 0 && capacity != kUnbounded) {
    throw Error(ErrorCode::kInvalidArgument, "negative flow capacity");
  }
  arcs_.push_back({from, to, capacity});
  return static_cast<int>(arcs_.size()) - 1;
}

namespace {

class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : net_(net),
        head_(net.nodes(), -1),
        level_(net.nodes()),
        iter_(net.nodes()) {
    std::int64_t surrogate = 1;
    for (const auto& a : net.arcs()) {
      if (a.capacity != FlowNetwork::kUnbounded) surrogate += a.capacity;
    }
    for (const auto& a : net.arcs()) {
      const std::int64_t cap =
          a.capacity == FlowNetwork::kUnbounded ? surrogate : a.capacity;
      Push(a.from, a.to, cap);
      Push(a.to, a.from, 0);
    }
  }

  FlowResult Run() {
    FlowResult result;
    if (net_.source() != net_.sink()) {
      while (Bfs()) {
        std::copy(head_.begin(), head_.end(), iter_.begin());
        while (const std::int64_t pushed = Dfs(
                   net_.source(), std::numeric_limits<std::int64_t>::max())) {
          result.value += pushed;
        }
      }
    }
    result.arc_flow.resize(net_.arcs().size());
    for (std::size_t i = 0; i < net_.arcs().size(); ++i) {
      result.arc_flow[i] = edges_[2 * i + 1].cap;
    }
    result.source_side.assign(net_.nodes(), false);
    for (int v = 0; v < net_.nodes(); ++v)
      result.source_side[v] = level_[v] >= 0;
    return result;
  }

 private:
  struct Edge {
    int to;
    int next;
    std::int64_t cap;
  };

  void Push(int from, int to, std::int64_t cap) {
    edges_.push_back({to, -1, cap});
    // Append at the tail so adjacency keeps insertion order.
    const int id = static_cast<int>(edges_.size()) - 1;
    if (tail_.size() < static_cast<std::size_t>(net_.nodes())) {
      tail_.assign(net_.nodes(), -1);
    }
    if (tail_[from] < 0) {
      head_[from] = id;
    } else {
      edges_[tail_[from]].next = id;
    }
    tail_[from] = id;
  }

  bool Bfs() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[net_.source()] = 0;
    queue.push(net_.source());
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int e = head_[v]; e >= 0; e = edges_[e].next) {
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[v] + 1;
          queue.push(edges_[e].to);
        }
      }
    }
    return level_[net_.sink()] >= 0;
  }

  std::int64_t Dfs(int v, std::int64_t limit) {
    if (v == net_.sink()) return limit;
    for (int& e = iter_[v]; e >= 0; e = edges_[e].next) {
      Edge& edge = edges_[e];
      if (edge.cap <= 0 || level_[edge.to] != level_[v] + 1) continue;
      const std::int64_t pushed = Dfs(edge.to, std::min(limit, edge.cap));
      if (pushed > 0) {
        edge.cap -= pushed;
        edges_[e ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  const FlowNetwork& net_;
  std::vector<Edge> edges_;
  std::vector<int> head_;
  std::vector<int> tail_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace

FlowResult MaxFlow(const FlowNetwork& net) { return Dinic(net).Run(); }

}  // namespace fdag
