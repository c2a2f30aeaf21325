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

// Small graph builders and naive reference implementations shared by the
// tests. Everything here is deliberately simple and slow.

#ifndef FDAG_TESTS_TEST_UTIL_H_
#define FDAG_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <set>
#include <vector>

#include "fdag/dag.h"
#include "fdag/model.h"

namespace fdag::testing {

inline PreferenceGraph Graph(int n, std::vector<Arc> arcs) {
  return PreferenceGraph::Build(n, arcs);
}

inline PreferenceGraph Edgeless(int n) { return Graph(n, {}); }

inline PreferenceGraph Chain(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return Graph(n, arcs);
}

inline Instance Inst(PreferenceGraph g, int k) {
  return MakeInstance(std::move(g), k);
}

// Vertices reachable from v by breadth-first search, v included.
inline std::vector<Vertex> BfsReach(const PreferenceGraph& g, Vertex v) {
  std::vector<bool> seen(g.size(), false);
  std::queue<Vertex> q;
  seen[v] = true;
  q.push(v);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : g.out(u)) {
      if (!seen[w]) {
        seen[w] = true;
        q.push(w);
      }
    }
  }
  std::vector<Vertex> out;
  for (int u = 0; u < g.size(); ++u) {
    if (seen[u]) out.push_back(u);
  }
  return out;
}

// Largest antichain by subset enumeration; n <= 20.
inline int BruteForceWidth(const PreferenceGraph& g) {
  const int n = g.size();
  std::vector<std::uint32_t> comparable(n, 0);
  for (int u = 0; u < n; ++u) {
    for (Vertex w : BfsReach(g, u)) {
      if (w != u) {
        comparable[u] |= 1u << w;
        comparable[w] |= 1u << u;
      }
    }
  }
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if ((mask >> u & 1) && (comparable[u] & mask)) ok = false;
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

// Dissatisfaction of one bundle, counted directly from BFS.
inline int NaiveDissatisfaction(const PreferenceGraph& g,
                                const std::vector<Vertex>& bundle) {
  std::set<Vertex> covered;
  for (Vertex v : bundle) {
    for (Vertex w : BfsReach(g, v)) covered.insert(w);
  }
  return g.size() - static_cast<int>(covered.size());
}

// Exhaustive optimum over all (k+1)^n assignments. Tiny inputs only.
inline int ExhaustiveOptimum(const PreferenceGraph& g, int k) {
  const int n = g.size();
  std::vector<int> owner(n, -1);
  int best = n;
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      int worst = 0;
      for (int a = 0; a < k; ++a) {
        std::vector<Vertex> bundle;
        for (int u = 0; u < n; ++u) {
          if (owner[u] == a) bundle.push_back(u);
        }
        worst = std::max(worst, NaiveDissatisfaction(g, bundle));
      }
      best = std::min(best, worst);
      return;
    }
    for (int a = -1; a < k; ++a) {
      owner[v] = a;
      rec(v + 1);
    }
  };
  rec(0);
  return best;
}

// All set partitions of {0..n-1}, as block-label vectors in restricted
// growth form.
inline void ForEachSetPartition(
    int n, const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> label(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      fn(label, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    fn(label, 0);
  } else {
    rec(0, 0);
  }
}

}  // namespace fdag::testing

#endif  // FDAG_TESTS_TEST_UTIL_H_
