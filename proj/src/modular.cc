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

#include "fdag/modular.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fdag/error.h"
#include "fdag/matching.h"

namespace fdag {
namespace {

// ---------------------------------------------------------------------------
// Modular decomposition of a DAG.
//
// Degenerate nodes are either parallel (no arcs between children) or linear
// (children totally ordered, every arc goes from an earlier child to a later
// one). Everything else is prime.

enum class NodeType { kLeaf, kParallel, kLinear, kPrime };

struct DecompNode {
  NodeType type = NodeType::kLeaf;
  std::vector<Vertex> vertices;
  std::vector<DecompNode> children;  // linear: in order
};

class Decomposer {
 public:
  explicit Decomposer(const PreferenceGraph& g)
      : g_(g), n_(g.size()), rel_(static_cast<std::size_t>(n_) * n_, 0) {
    for (const Arc& a : g.arcs()) {
      rel_[Index(a.tail, a.head)] = 1;
      rel_[Index(a.head, a.tail)] = 2;
    }
  }

  DecompNode Decompose(std::vector<Vertex> x) {
    DecompNode node;
    std::sort(x.begin(), x.end());
    node.vertices = x;
    if (x.size() == 1) return node;

    std::vector<std::vector<Vertex>> parts =
        Components(x, [&](Vertex a, Vertex b) { return Rel(a, b) != 0; });
    if (parts.size() > 1) {
      node.type = NodeType::kParallel;
    } else {
      parts = LinearGroups(x);
      if (parts.size() > 1) {
        node.type = NodeType::kLinear;
      } else {
        node.type = NodeType::kPrime;
        parts = MaximalProperModules(x);
      }
    }
    for (auto& part : parts)
      node.children.push_back(Decompose(std::move(part)));
    return node;
  }

 private:
  std::size_t Index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * n_ + b;
  }
  // 0: no arc, 1: a -> b, 2: b -> a.
  int Rel(Vertex a, Vertex b) const { return rel_[Index(a, b)]; }

  template <typename Linked>
  std::vector<std::vector<Vertex>> Components(const std::vector<Vertex>& x,
                                              Linked linked) const {
    std::vector<int> comp(x.size(), -1);
    std::vector<std::vector<Vertex>> out;
    for (std::size_t s = 0; s < x.size(); ++s) {
      if (comp[s] >= 0) continue;
      const int id = static_cast<int>(out.size());
      out.emplace_back();
      std::vector<std::size_t> stack{s};
      comp[s] = id;
      while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        out[id].push_back(x[i]);
        for (std::size_t j = 0; j < x.size(); ++j) {
          if (comp[j] < 0 && linked(x[i], x[j])) {
            comp[j] = id;
            stack.push_back(j);
          }
        }
      }
      std::sort(out[id].begin(), out[id].end());
    }
    return out;
  }

  // Components of the non-adjacency graph, merged while two groups see arcs
  // in both directions between them. If more than one group survives, the
  // groups are the children of a linear node, returned in order.
  std::vector<std::vector<Vertex>> LinearGroups(
      const std::vector<Vertex>& x) const {
    std::vector<std::vector<Vertex>> groups = Components(
        x, [&](Vertex a, Vertex b) { return a != b && Rel(a, b) == 0; });
    bool merged = true;
    while (merged && groups.size() > 1) {
      merged = false;
      for (std::size_t i = 0; i < groups.size() && !merged; ++i) {
        for (std::size_t j = i + 1; j < groups.size() && !merged; ++j) {
          if (Orientation(groups[i], groups[j]) == 0) {
            groups[i].insert(groups[i].end(), groups[j].begin(),
                             groups[j].end());
            std::sort(groups[i].begin(), groups[i].end());
            groups.erase(groups.begin() + j);
            merged = true;
          }
        }
      }
    }
    if (groups.size() > 1) {
      // Uniform orientations on an acyclic quotient: sort by out-degree in
      // the quotient tournament.
      std::vector<int> wins(groups.size(), 0);
      for (std::size_t i = 0; i < groups.size(); ++i) {
        for (std::size_t j = 0; j < groups.size(); ++j) {
          if (i != j && Orientation(groups[i], groups[j]) == 1) ++wins[i];
        }
      }
      std::vector<std::size_t> order(groups.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return wins[a] > wins[b];
      });
      std::vector<std::vector<Vertex>> sorted;
      for (std::size_t i : order) sorted.push_back(std::move(groups[i]));
      return sorted;
    }
    return groups;
  }

  // 1 if every pair is an arc a -> b, 2 if every pair is b -> a, 0 if the
  // directions are mixed or some pair is non-adjacent.
  int Orientation(const std::vector<Vertex>& a,
                  const std::vector<Vertex>& b) const {
    int seen = -1;
    for (Vertex u : a) {
      for (Vertex v : b) {
        const int r = Rel(u, v);
        if (r == 0) return 0;
        if (seen < 0) seen = r;
        if (r != seen) return 0;
      }
    }
    return seen < 0 ? 0 : seen;
  }

  // Smallest module of G[x] containing `seed` (two or more vertices).
  std::vector<bool> Closure(const std::vector<Vertex>& x, Vertex u,
                            Vertex w) const {
    std::vector<bool> in(n_, false);
    std::vector<Vertex> queue{u, w};
    in[u] = in[w] = true;
    for (std::size_t head = 1; head < queue.size(); ++head) {
      const Vertex added = queue[head];
      for (Vertex z : x) {
        if (!in[z] && Rel(z, added) != Rel(z, u)) {
          in[z] = true;
          queue.push_back(z);
        }
      }
    }
    return in;
  }

  std::vector<std::vector<Vertex>> MaximalProperModules(
      const std::vector<Vertex>& x) const {
    std::vector<int> part(n_, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex v : x) {
      if (part[v] >= 0) continue;
      std::vector<bool> member(n_, false);
      member[v] = true;
      for (Vertex w : x) {
        if (w == v || member[w]) continue;
        const std::vector<bool> m = Closure(x, v, w);
        const bool proper =
            std::any_of(x.begin(), x.end(), [&](Vertex z) { return !m[z]; });
        if (!proper) continue;
        for (Vertex z : x) {
          if (m[z]) member[z] = true;
        }
      }
      const int id = static_cast<int>(out.size());
      out.emplace_back();
      for (Vertex z : x) {
        if (member[z]) {
          part[z] = id;
          out[id].push_back(z);
        }
      }
    }
    return out;
  }

  const PreferenceGraph& g_;
  const int n_;
  std::vector<char> rel_;
};

bool IsSingleton(const DecompNode& node) { return node.vertices.size() == 1; }

void Collect(const PreferenceGraph& g, const DecompNode& node,
             std::vector<Module>& out) {
  auto singleton = [&](Vertex v) { out.push_back({ModuleKind::kPath, {v}}); };
  switch (node.type) {
    case NodeType::kLeaf:
      singleton(node.vertices[0]);
      return;
    case NodeType::kParallel: {
      std::vector<Vertex> loose;
      for (const auto& child : node.children) {
        if (IsSingleton(child)) {
          loose.push_back(child.vertices[0]);
        } else {
          Collect(g, child, out);
        }
      }
      std::sort(loose.begin(), loose.end());
      if (loose.size() == 1) {
        singleton(loose[0]);
      } else if (!loose.empty()) {
        out.push_back({ModuleKind::kIndependentSet, std::move(loose)});
      }
      return;
    }
    case NodeType::kLinear: {
      const auto& kids = node.children;
      for (std::size_t i = 0; i < kids.size();) {
        if (!IsSingleton(kids[i])) {
          Collect(g, kids[i], out);
          ++i;
        } else if (i + 1 < kids.size() && IsSingleton(kids[i + 1])) {
          out.push_back({ModuleKind::kPath,
                         {kids[i].vertices[0], kids[i + 1].vertices[0]}});
          i += 2;
        } else {
          singleton(kids[i].vertices[0]);
          ++i;
        }
      }
      return;
    }
    case NodeType::kPrime: {
      const bool flat =
          std::all_of(node.children.begin(), node.children.end(), IsSingleton);
      if (flat) {
        if (auto order = InducedPathOrder(g, node.vertices)) {
          out.push_back({ModuleKind::kPath, std::move(*order)});
          return;
        }
      }
      for (const auto& child : node.children) Collect(g, child, out);
      return;
    }
  }
}

}  // namespace

int ModularPartition::path_count() const {
  return static_cast<int>(
      std::count_if(modules.begin(), modules.end(), [](const Module& m) {
        return m.kind == ModuleKind::kPath && m.size() > 1;
      }));
}

bool ModularPartition::all_independent() const {
  return std::all_of(modules.begin(), modules.end(), [](const Module& m) {
    return m.kind == ModuleKind::kIndependentSet || m.size() == 1;
  });
}

std::string ModularPartition::Summary() const {
  std::ostringstream out;
  out << "d=" << size();
  for (const Module& m : modules) {
    out << (m.kind == ModuleKind::kPath ? " path[" : " is{");
    for (std::size_t i = 0; i < m.vertices.size(); ++i) {
      out << (i ? "," : "") << m.vertices[i];
    }
    out << (m.kind == ModuleKind::kPath ? "]" : "}");
  }
  return out.str();
}

bool IsModule(const PreferenceGraph& g, std::span<const Vertex> x) {
  if (x.empty()) return true;
  std::vector<bool> in(g.size(), false);
  for (Vertex v : x) in[v] = true;
  const Vertex ref = x[0];
  for (Vertex z = 0; z < g.size(); ++z) {
    if (in[z]) continue;
    const bool to = g.has_arc(z, ref);
    const bool from = g.has_arc(ref, z);
    for (Vertex v : x) {
      if (g.has_arc(z, v) != to || g.has_arc(v, z) != from) return false;
    }
  }
  return true;
}

bool InducesIndependentSet(const PreferenceGraph& g,
                           std::span<const Vertex> x) {
  for (Vertex u : x) {
    for (Vertex v : x) {
      if (g.has_arc(u, v)) return false;
    }
  }
  return true;
}

std::optional<std::vector<Vertex>> InducedPathOrder(const PreferenceGraph& g,
                                                    std::span<const Vertex> x) {
  if (x.empty()) return std::nullopt;
  std::vector<bool> in(g.size(), false);
  for (Vertex v : x) in[v] = true;
  std::vector<int> indeg(g.size(), 0), outdeg(g.size(), 0);
  int arcs = 0;
  for (Vertex u : x) {
    for (Vertex v : g.out(u)) {
      if (!in[v]) continue;
      ++outdeg[u];
      ++indeg[v];
      ++arcs;
    }
  }
  if (arcs != static_cast<int>(x.size()) - 1) return std::nullopt;
  Vertex head = -1;
  for (Vertex v : x) {
    if (indeg[v] > 1 || outdeg[v] > 1) return std::nullopt;
    if (indeg[v] == 0) {
      if (head >= 0) return std::nullopt;
      head = v;
    }
  }
  std::vector<Vertex> order{head};
  while (order.size() < x.size()) {
    Vertex next = -1;
    for (Vertex v : g.out(order.back())) {
      if (in[v]) next = v;
    }
    if (next < 0) return std::nullopt;
    order.push_back(next);
  }
  return order;
}

ModularPartition ComputeModularPartition(const PreferenceGraph& g) {
  ModularPartition mp;
  if (g.size() == 0) return mp;
  std::vector<Vertex> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  const DecompNode root = Decomposer(g).Decompose(all);
  Collect(g, root, mp.modules);
  std::sort(mp.modules.begin(), mp.modules.end(),
            [](const Module& a, const Module& b) {
              return *std::min_element(a.vertices.begin(), a.vertices.end()) <
                     *std::min_element(b.vertices.begin(), b.vertices.end());
            });
  return mp;
}

// ---------------------------------------------------------------------------
// Guess-and-flow over path and independent-set modules.

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t Binomial(int n, int r) {
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    result = SaturatingMul(result, static_cast<std::uint64_t>(n - r + i));
    if (result != kSaturated) result /= static_cast<std::uint64_t>(i);
  }
  return result;
}

bool IsIndependentModule(const Module& m) {
  return m.kind == ModuleKind::kIndependentSet;
}

// Options per module, ignoring symmetry.
std::uint64_t ModuleChoices(const Module& m, int k, bool canonical) {
  if (IsIndependentModule(m)) {
    const int top = std::min(k, m.size());
    if (canonical) return static_cast<std::uint64_t>(top) + 1;
    std::uint64_t total = 0;
    for (int s = 0; s <= top; ++s) {
      total = std::min(kSaturated - 1, total + Binomial(k, s));
    }
    return total;
  }
  if (canonical) return 1;
  const int length = std::min(k, m.size());
  std::uint64_t total = 1;
  for (int i = 0; i < length; ++i) {
    total = SaturatingMul(total, static_cast<std::uint64_t>(k - i));
  }
  return total;
}

// Agents per path position (path modules) or agent bitmask (independent
// modules, stored as a single entry).
using Choice = std::vector<int>;

std::vector<Choice> EnumerateChoices(const Module& m, int k, bool canonical) {
  std::vector<Choice> out;
  if (IsIndependentModule(m)) {
    const int top = std::min(k, m.size());
    if (canonical) {
      for (int s = 0; s <= top; ++s) out.push_back({(1 << s) - 1});
      return out;
    }
    for (int mask = 0; mask < (1 << k); ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) <= top) {
        out.push_back({mask});
      }
    }
    return out;
  }
  const int length = std::min(k, m.size());
  if (canonical) {
    Choice c(length);
    std::iota(c.begin(), c.end(), 0);
    out.push_back(c);
    return out;
  }
  // All injections of `length` positions into k agents.
  Choice current;
  std::vector<bool> used(k, false);
  auto recurse = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == length) {
      out.push_back(current);
      return;
    }
    for (int a = 0; a < k; ++a) {
      if (used[a]) continue;
      used[a] = true;
      current.push_back(a);
      self(self);
      current.pop_back();
      used[a] = false;
    }
  };
  recurse(recurse);
  return out;
}

struct GuessEvaluation {
  Allocation partial;
  std::vector<int> satisfaction;
  // Per independent module: agents holding a surviving vertex, and the
  // vertices still free.
  std::vector<std::vector<int>> active;
  std::vector<std::vector<Vertex>> free;
};

class ModularFpt {
 public:
  ModularFpt(const Instance& inst, const ModularPartition& mp)
      : inst_(inst), mp_(mp), k_(inst.agents) {
    for (int i = 0; i < mp.size(); ++i) {
      if (IsIndependentModule(mp.modules[i])) independent_.push_back(i);
    }
  }

  GuessEvaluation Evaluate(const std::vector<const Choice*>& guess) const {
    GuessEvaluation eval;
    Allocation raw = Allocation::Empty(k_);
    for (int i = 0; i < mp_.size(); ++i) {
      const Module& m = mp_.modules[i];
      const Choice& c = *guess[i];
      if (IsIndependentModule(m)) {
        int next = 0;
        for (int a = 0; a < k_; ++a) {
          if (c[0] >> a & 1) raw.Give(a, m.vertices[next++]);
        }
      } else {
        for (std::size_t pos = 0; pos < c.size(); ++pos) {
          raw.Give(c[pos], m.vertices[pos]);
        }
      }
    }
    eval.partial = NormalizeToAntichains(inst_, raw);
    std::vector<int> owner(inst_.items(), -1);
    eval.satisfaction.resize(k_);
    for (int a = 0; a < k_; ++a) {
      for (Vertex v : eval.partial.bundles[a]) owner[v] = a;
      eval.satisfaction[a] = static_cast<int>(
          Dominated(inst_.graph, eval.partial.bundles[a]).count());
    }
    for (int i : independent_) {
      const Module& m = mp_.modules[i];
      std::vector<int> active;
      std::vector<Vertex> free;
      for (Vertex v : m.vertices) {
        if (owner[v] >= 0) {
          active.push_back(owner[v]);
        } else {
          free.push_back(v);
        }
      }
      eval.active.push_back(std::move(active));
      eval.free.push_back(std::move(free));
    }
    return eval;
  }

  // Largest sigma any completion of the guess could reach.
  int UpperBound(const GuessEvaluation& eval) const {
    std::vector<int> extra(k_, 0);
    for (std::size_t i = 0; i < eval.active.size(); ++i) {
      for (int a : eval.active[i]) {
        extra[a] += static_cast<int>(eval.free[i].size());
      }
    }
    int bound = std::numeric_limits<int>::max();
    for (int a = 0; a < k_; ++a) {
      bound = std::min(bound, eval.satisfaction[a] + extra[a]);
    }
    return bound;
  }

  // Flow network raising every agent to at least sigma; returns the
  // per-(agent, module) counts when all source arcs saturate.
  std::optional<std::vector<std::vector<std::int64_t>>> Complete(
      const GuessEvaluation& eval, int sigma) const {
    const int q = static_cast<int>(eval.active.size());
    const int source = 0;
    const int sink = 1;
    auto agent_node = [](int a) { return 2 + a; };
    auto module_node = [&](int i) { return 2 + k_ + i; };
    FlowNetwork net(2 + k_ + q, source, sink);
    std::int64_t demand = 0;
    for (int a = 0; a < k_; ++a) {
      if (eval.satisfaction[a] >= sigma) continue;
      net.AddArc(source, agent_node(a), sigma - eval.satisfaction[a]);
      demand += sigma - eval.satisfaction[a];
    }
    std::vector<std::vector<int>> arc_of(k_, std::vector<int>(q, -1));
    for (int i = 0; i < q; ++i) {
      for (int a : eval.active[i]) {
        if (eval.satisfaction[a] >= sigma) continue;
        arc_of[a][i] =
            net.AddArc(agent_node(a), module_node(i), FlowNetwork::kUnbounded);
      }
      net.AddArc(module_node(i), sink,
                 static_cast<std::int64_t>(eval.free[i].size()));
    }
    const FlowResult flow = MaxFlow(net);
    if (flow.value != demand) return std::nullopt;
    std::vector<std::vector<std::int64_t>> counts(
        k_, std::vector<std::int64_t>(q, 0));
    for (int a = 0; a < k_; ++a) {
      for (int i = 0; i < q; ++i) {
        if (arc_of[a][i] >= 0) counts[a][i] = flow.arc_flow[arc_of[a][i]];
      }
    }
    return counts;
  }

  // Best sigma reachable from the guess, if it beats `floor`.
  std::optional<int> BestSigma(const GuessEvaluation& eval, int floor) const {
    int lo =
        *std::min_element(eval.satisfaction.begin(), eval.satisfaction.end());
    int hi = UpperBound(eval);
    if (hi <= floor) return std::nullopt;
    // lo is always feasible (nothing to add); search the largest feasible.
    while (lo < hi) {
      const int mid = lo + (hi - lo + 1) / 2;
      if (Complete(eval, mid)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    if (lo <= floor) return std::nullopt;
    return lo;
  }

  Allocation Materialize(const GuessEvaluation& eval, int sigma) const {
    const auto counts = Complete(eval, sigma);
    if (!counts) throw std::logic_error("stored guess lost feasibility");
    Allocation alloc = eval.partial;
    for (std::size_t i = 0; i < eval.free.size(); ++i) {
      std::size_t next = 0;
      for (int a = 0; a < k_; ++a) {
        for (std::int64_t c = 0; c < (*counts)[a][i]; ++c) {
          alloc.Give(a, eval.free[i][next++]);
        }
      }
    }
    return alloc;
  }

 private:
  const Instance& inst_;
  const ModularPartition& mp_;
  const int k_;
  std::vector<int> independent_;
};

}  // namespace

std::uint64_t CountModularGuesses(const Instance& inst,
                                  const ModularPartition& mp) {
  std::uint64_t total = 1;
  for (int i = 0; i < mp.size(); ++i) {
    total =
        SaturatingMul(total, ModuleChoices(mp.modules[i], inst.agents, i == 0));
  }
  return total;
}

SolveResult SolveModularFpt(const Instance& inst, const ModularPartition& mp,
                            const FptOptions& options) {
  const int k = inst.agents;
  const int n = inst.items();
  if (k >= 31) {
    throw Error(ErrorCode::kBudgetExceeded, "too many agents to guess over");
  }
  const std::uint64_t guesses = CountModularGuesses(inst, mp);
  if (guesses > options.guess_budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(guesses) + " guesses exceed the budget of " +
                    std::to_string(options.guess_budget));
  }
  if (n == 0) return MakeResult(inst, Allocation::Empty(k), "modular_fpt");

  // The first module is fixed to a canonical labelling of the agents; any
  // guess can be relabelled to match it.
  std::vector<std::vector<Choice>> choices;
  for (int i = 0; i < mp.size(); ++i) {
    choices.push_back(EnumerateChoices(mp.modules[i], k, i == 0));
  }
  ModularFpt fpt(inst, mp);
  std::vector<std::size_t> odometer(mp.size(), 0);
  std::vector<const Choice*> guess(mp.size());
  int best_sigma = -1;
  std::vector<std::size_t> best_guess;
  while (true) {
    for (int i = 0; i < mp.size(); ++i) guess[i] = &choices[i][odometer[i]];
    const GuessEvaluation eval = fpt.Evaluate(guess);
    if (auto sigma = fpt.BestSigma(eval, best_sigma)) {
      best_sigma = *sigma;
      best_guess = odometer;
      if (best_sigma == n) break;
    }
    int i = 0;
    while (i < mp.size() && ++odometer[i] == choices[i].size()) {
      odometer[i++] = 0;
    }
    if (i == mp.size()) break;
  }

  Allocation alloc = Allocation::Empty(k);
  if (best_sigma >= 0) {
    for (int i = 0; i < mp.size(); ++i) {
      guess[i] = &choices[i][best_guess[i]];
    }
    alloc = fpt.Materialize(fpt.Evaluate(guess), best_sigma);
  }
  SolveResult result = MakeResult(inst, std::move(alloc), "modular_fpt");
  if (best_sigma >= 0 && result.optimum > n - best_sigma) {
    throw std::logic_error("flow completion missed its target satisfaction");
  }
  return result;
}

// ---------------------------------------------------------------------------
// Independent-set modules and the integer feasibility model.

AssignableFamily ComputeAssignableSets(const PreferenceGraph& g,
                                       std::span<const Module> is_modules) {
  const int n = g.size();
  const int d = static_cast<int>(is_modules.size());
  if (d > 20) {
    throw Error(ErrorCode::kNotAPartition, "more than 20 modules");
  }
  std::vector<int> seen(n, 0);
  for (const Module& m : is_modules) {
    if (m.vertices.empty()) {
      throw Error(ErrorCode::kNotAPartition, "empty module");
    }
    for (Vertex v : m.vertices) {
      if (v < 0 || v >= n || seen[v]++) {
        throw Error(ErrorCode::kNotAPartition, "vertex " + std::to_string(v) +
                                                   " repeated or out of range");
      }
    }
    if (!InducesIndependentSet(g, m.vertices) || !IsModule(g, m.vertices)) {
      throw Error(ErrorCode::kNotAPartition, "not an independent-set module");
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != n) {
    throw Error(ErrorCode::kNotAPartition, "modules do not cover every vertex");
  }

  AssignableFamily fam;
  for (const Module& m : is_modules) {
    Module copy = m;
    copy.kind = ModuleKind::kIndependentSet;
    std::sort(copy.vertices.begin(), copy.vertices.end());
    fam.modules.push_back(std::move(copy));
  }
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << d); ++mask) {
    VertexSet members = g.EmptySet();
    VertexSet covered = g.EmptySet();
    for (int i = 0; i < d; ++i) {
      if (!(mask >> i & 1)) continue;
      for (Vertex v : fam.modules[i].vertices) {
        members.set(v);
        covered |= g.reach(v);
      }
    }
    bool antichain = true;
    for (auto v = members.find_first(); v != VertexSet::npos && antichain;
         v = members.find_next(v)) {
      antichain = (g.reach(static_cast<Vertex>(v)) & members).count() == 1;
    }
    if (!antichain) continue;
    fam.sets.push_back({mask, static_cast<int>(members.count()),
                        n - static_cast<int>(covered.count())});
  }
  return fam;
}

namespace {

int MemberCount(const AssignableSet& s) { return std::popcount(s.members); }

// Decides the y-part for a fixed x by a transportation flow.
std::optional<IlpSolution> SolveForX(const IlpModel& model,
                                     const std::vector<int>& x) {
  const int m = static_cast<int>(model.sets.size());
  const int d = static_cast<int>(model.module_sizes.size());
  std::vector<std::int64_t> spare(d);
  for (int i = 0; i < d; ++i) spare[i] = model.module_sizes[i];
  for (int s = 0; s < m; ++s) {
    for (int i = 0; i < d; ++i) {
      if (model.sets[s].members >> i & 1) spare[i] -= x[s];
    }
  }
  if (std::any_of(spare.begin(), spare.end(),
                  [](std::int64_t c) { return c < 0; })) {
    return std::nullopt;
  }
  const int source = 0;
  const int sink = 1;
  FlowNetwork net(2 + m + d, source, sink);
  std::int64_t demand = 0;
  std::vector<std::vector<int>> arc_of(m, std::vector<int>(d, -1));
  for (int s = 0; s < m; ++s) {
    const AssignableSet& set = model.sets[s];
    const std::int64_t need =
        static_cast<std::int64_t>(x[s]) *
            (set.guaranteed + set.union_size - model.delta) -
        static_cast<std::int64_t>(x[s]) * MemberCount(set);
    if (need <= 0) continue;
    net.AddArc(source, 2 + s, need);
    demand += need;
    for (int i = 0; i < d; ++i) {
      if (set.members >> i & 1) {
        arc_of[s][i] = net.AddArc(2 + s, 2 + m + i, FlowNetwork::kUnbounded);
      }
    }
  }
  for (int i = 0; i < d; ++i) net.AddArc(2 + m + i, sink, spare[i]);
  const FlowResult flow = MaxFlow(net);
  if (flow.value != demand) return std::nullopt;
  IlpSolution solution;
  solution.x = x;
  solution.y.assign(m, std::vector<int>(d, 0));
  for (int s = 0; s < m; ++s) {
    for (int i = 0; i < d; ++i) {
      if (!(model.sets[s].members >> i & 1)) continue;
      solution.y[s][i] =
          x[s] +
          static_cast<int>(arc_of[s][i] >= 0 ? flow.arc_flow[arc_of[s][i]] : 0);
    }
  }
  return solution;
}

}  // namespace

std::optional<IlpSolution> SolveIlpFeasibility(const IlpModel& model,
                                               std::uint64_t* work) {
  const int m = static_cast<int>(model.sets.size());
  if (m == 0 || m > model.agents) return std::nullopt;
  // Compositions of k into m positive parts, lexicographically.
  std::vector<int> x(m, 1);
  std::optional<IlpSolution> found;
  auto recurse = [&](auto&& self, int index, int left) -> bool {
    if (index == m - 1) {
      x[index] = left;
      if (work) ++*work;
      found = SolveForX(model, x);
      return found.has_value();
    }
    for (int value = 1; value <= left - (m - 1 - index); ++value) {
      x[index] = value;
      if (self(self, index + 1, left - value)) return true;
    }
    return false;
  };
  recurse(recurse, 0, model.agents);
  return found;
}

bool SatisfiesIlp(const IlpModel& model, const IlpSolution& solution) {
  const int m = static_cast<int>(model.sets.size());
  const int d = static_cast<int>(model.module_sizes.size());
  if (static_cast<int>(solution.x.size()) != m) return false;
  int total = 0;
  std::vector<int> used(d, 0);
  for (int s = 0; s < m; ++s) {
    const AssignableSet& set = model.sets[s];
    const int x = solution.x[s];
    if (x < 1) return false;
    total += x;
    std::int64_t y_sum = 0;
    for (int i = 0; i < d; ++i) {
      if (!(set.members >> i & 1)) continue;
      const int y = solution.y[s][i];
      if (y < x) return false;
      y_sum += y;
      used[i] += y;
    }
    if (static_cast<std::int64_t>(model.delta) * x <
        static_cast<std::int64_t>(set.guaranteed) * x +
            static_cast<std::int64_t>(set.union_size) * x - y_sum) {
      return false;
    }
  }
  if (total != model.agents) return false;
  for (int i = 0; i < d; ++i) {
    if (used[i] > model.module_sizes[i]) return false;
  }
  return true;
}

namespace {

// Agents [first, first + x_S) become S-agents. Each receives one vertex per
// member module, then the surplus is dealt round-robin across modules so
// bundle sizes differ by at most one.
void DealSet(const AssignableFamily& fam, const AssignableSet& set, int first,
             int count, const std::vector<int>& y,
             std::vector<std::size_t>& next_free, Allocation& alloc) {
  int turn = 0;
  for (int i = 0; i < static_cast<int>(fam.modules.size()); ++i) {
    if (!(set.members >> i & 1)) continue;
    const auto& vertices = fam.modules[i].vertices;
    for (int a = 0; a < count; ++a) {
      alloc.Give(first + a, vertices[next_free[i]++]);
    }
    for (int extra = 0; extra < y[i] - count; ++extra) {
      alloc.Give(first + turn, vertices[next_free[i]++]);
      turn = (turn + 1) % count;
    }
  }
}

}  // namespace

SolveResult SolveIsModules(const Instance& inst, const AssignableFamily& fam,
                           const IsModuleOptions& options) {
  for (const Module& m : fam.modules) {
    if (m.kind != ModuleKind::kIndependentSet && m.size() != 1) {
      throw Error(ErrorCode::kNotAllIsModules, "family contains a path module");
    }
  }
  const int k = inst.agents;
  const int n = inst.items();
  if (k > n) {
    throw Error(ErrorCode::kTooManyAgents,
                "independent-set solver needs k <= n");
  }
  const int family_size = static_cast<int>(fam.sets.size());
  if (family_size >= 63 ||
      (std::uint64_t{1} << family_size) > options.guess_budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "2^" + std::to_string(family_size) +
                    " assignable-family guesses exceed the budget");
  }

  IlpModel model;
  model.agents = k;
  for (const Module& m : fam.modules) model.module_sizes.push_back(m.size());

  std::uint64_t work = 0;
  // Smallest-index feasible guess for a threshold, with its solution.
  auto feasible =
      [&](int delta) -> std::optional<std::pair<std::uint64_t, IlpSolution>> {
    model.delta = delta;
    for (std::uint64_t guess = 1; guess < (std::uint64_t{1} << family_size);
         ++guess) {
      if (std::popcount(guess) > k) continue;
      model.sets.clear();
      for (int s = 0; s < family_size; ++s) {
        if (guess >> s & 1) model.sets.push_back(fam.sets[s]);
      }
      auto solution = SolveIlpFeasibility(model, &work);
      if (work > options.guess_budget) {
        throw Error(ErrorCode::kBudgetExceeded,
                    "integer feasibility work exceeds the budget");
      }
      if (solution) return std::make_pair(guess, std::move(*solution));
    }
    return std::nullopt;
  };

  int lo = 0;
  int hi = n - 1;
  auto witness = feasible(hi);
  if (!witness) throw std::logic_error("no allocation at threshold n - 1");
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (auto found = feasible(mid)) {
      hi = mid;
      witness = std::move(found);
    } else {
      lo = mid + 1;
    }
  }

  const auto& [guess, solution] = *witness;
  Allocation alloc = Allocation::Empty(k);
  std::vector<std::size_t> next_free(fam.modules.size(), 0);
  int first = 0;
  int slot = 0;
  for (int s = 0; s < family_size; ++s) {
    if (!(guess >> s & 1)) continue;
    DealSet(fam, fam.sets[s], first, solution.x[slot], solution.y[slot],
            next_free, alloc);
    first += solution.x[slot];
    ++slot;
  }
  SolveResult result = MakeResult(inst, std::move(alloc), "is_modules");
  if (result.optimum > lo) {
    throw std::logic_error("reconstructed allocation exceeds its threshold");
  }
  return result;
}

}  // namespace fdag
