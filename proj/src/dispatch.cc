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

#include "fdag/dispatch.h"

#include <sstream>
#include <stdexcept>

#include "fdag/error.h"
#include "fdag/modular.h"
#include "fdag/oracle.h"
#include "fdag/structured.h"

namespace fdag {
namespace {

// Assignable sets are enumerated as bitmasks over the modules.
constexpr int kMaxIsModules = 20;

SolveResult CanonicalTooManyAgents(const Instance& inst) {
  Allocation alloc = Allocation::Empty(inst.agents);
  const auto& topo = inst.graph.topo_order();
  for (int i = 0; i < inst.items(); ++i) alloc.Give(i, topo[i]);
  return MakeResult(inst, std::move(alloc),
                    SolverName(SolverId::kTooManyAgents),
                    "k > n: some agent receives nothing");
}

SolveResult SingleAgent(const Instance& inst) {
  Allocation alloc = Allocation::Empty(1);
  alloc.bundles[0] = Sources(inst.graph);
  return MakeResult(inst, std::move(alloc), SolverName(SolverId::kSingleAgent));
}

AssignableFamily FamilyFor(const Instance& inst, const ModularPartition& mp) {
  return ComputeAssignableSets(inst.graph, mp.modules);
}

bool IsBudgetError(const Error& e) {
  return e.code() == ErrorCode::kBudgetExceeded ||
         e.code() == ErrorCode::kStateSpaceExceeded;
}

void CheckResult(const Instance& inst, const SolveResult& result) {
  const DissatisfactionProfile profile =
      ComputeProfile(inst, result.allocation);
  if (profile != result.profile ||
      MaxDissatisfaction(profile) != result.optimum) {
    throw std::logic_error("solver " + result.solver +
                           " returned an inconsistent result");
  }
}

}  // namespace

std::string SolverName(SolverId id) {
  switch (id) {
    case SolverId::kTooManyAgents:
      return "too_many_agents";
    case SolverId::kSingleAgent:
      return "single_agent";
    case SolverId::kTwoAgents:
      return "two_agents";
    case SolverId::kOutStars:
      return "out_stars";
    case SolverId::kWidthTwo:
      return "width_two";
    case SolverId::kOutForest:
      return "out_forest";
    case SolverId::kIsModules:
      return "is_modules";
    case SolverId::kModularFpt:
      return "modular_fpt";
    case SolverId::kOracle:
      return "oracle";
  }
  return "unknown";
}

std::string DispatchReport::Render() const {
  std::ostringstream out;
  out << "tags:";
  for (const auto& t : tags.Names()) out << ' ' << t;
  out << "\nwidth: " << tags.width
      << "\nchosen: " << (chosen.empty() ? "(none)" : chosen) << '\n';
  for (const auto& c : considered) out << "skipped " << c << '\n';
  for (const auto& n : notes) out << "note " << n << '\n';
  return out.str();
}

SolveResult RunSolver(SolverId id, const Instance& inst,
                      const SolverBudgets& budgets) {
  switch (id) {
    case SolverId::kTooManyAgents:
      return CanonicalTooManyAgents(inst);
    case SolverId::kSingleAgent:
      return SingleAgent(inst);
    case SolverId::kTwoAgents:
      return SolveTwoAgents(inst);
    case SolverId::kOutStars:
      return SolveOutStars(inst);
    case SolverId::kWidthTwo:
      return SolveWidthTwo(inst);
    case SolverId::kOutForest:
      return SolveOutForest(inst, {.max_agents = budgets.dp_k_cap,
                                   .max_profiles = budgets.dp_max_profiles});
    case SolverId::kIsModules: {
      const ModularPartition mp = ComputeModularPartition(inst.graph);
      return SolveIsModules(inst, FamilyFor(inst, mp),
                            {.guess_budget = budgets.guess_budget});
    }
    case SolverId::kModularFpt:
      return SolveModularFpt(inst, ComputeModularPartition(inst.graph),
                             {.guess_budget = budgets.guess_budget});
    case SolverId::kOracle:
      return BruteForceOptimum(inst, {.node_budget = budgets.oracle_budget});
  }
  throw std::logic_error("unknown solver id");
}

std::vector<SolverId> ApplicableSolvers(const Instance& inst,
                                        const SolverBudgets& budgets) {
  const int n = inst.items();
  const int k = inst.agents;
  if (k > n) return {SolverId::kTooManyAgents};
  std::vector<SolverId> out;
  if (k == 1) out.push_back(SolverId::kSingleAgent);
  if (k == 2 && n >= 2) out.push_back(SolverId::kTwoAgents);
  const PreferenceGraph& g = inst.graph;
  if (k >= 3 && IsOutStarCollection(g)) out.push_back(SolverId::kOutStars);
  if (ComputeWidth(g).width <= 2) out.push_back(SolverId::kWidthTwo);
  if (IsOutForest(g) && k <= budgets.dp_k_cap) {
    out.push_back(SolverId::kOutForest);
  }
  const ModularPartition mp = ComputeModularPartition(g);
  if (mp.all_independent() && mp.size() <= kMaxIsModules) {
    const AssignableFamily fam = FamilyFor(inst, mp);
    if (fam.sets.size() < 63 &&
        (std::uint64_t{1} << fam.sets.size()) <= budgets.guess_budget) {
      out.push_back(SolverId::kIsModules);
    }
  }
  if (k < 31 && CountModularGuesses(inst, mp) <= budgets.guess_budget) {
    out.push_back(SolverId::kModularFpt);
  }
  return out;
}

Dispatched DispatchSolve(const Instance& inst, const SolverBudgets& budgets) {
  Dispatched out;
  DispatchReport& report = out.report;
  const int n = inst.items();
  const int k = inst.agents;

  auto finish = [&](SolverId id, SolveResult result) {
    CheckResult(inst, result);
    report.chosen = SolverName(id);
    out.result = std::move(result);
    return out;
  };

  // k > n never looks at the graph.
  if (k > n) {
    return finish(SolverId::kTooManyAgents, CanonicalTooManyAgents(inst));
  }
  report.tags = ClassifyShape(inst.graph);
  if (k == 1) return finish(SolverId::kSingleAgent, SingleAgent(inst));
  if (k == 2) return finish(SolverId::kTwoAgents, SolveTwoAgents(inst));
  report.considered.push_back("two_agents: k != 2");

  auto attempt = [&](SolverId id) -> bool {
    try {
      out.result = RunSolver(id, inst, budgets);
      return true;
    } catch (const Error& e) {
      if (!IsBudgetError(e)) throw;
      report.considered.push_back(SolverName(id) + ": " + e.what());
      return false;
    }
  };

  if (report.tags.out_star_collection) {
    return finish(SolverId::kOutStars, SolveOutStars(inst));
  }
  report.considered.push_back("out_stars: not a collection of out-stars");
  if (report.tags.width_le_2) {
    return finish(SolverId::kWidthTwo, SolveWidthTwo(inst));
  }
  report.considered.push_back("width_two: width " +
                              std::to_string(report.tags.width) + " > 2");
  if (!report.tags.out_forest) {
    report.considered.push_back("out_forest: not an out-forest");
  } else if (k > budgets.dp_k_cap) {
    report.considered.push_back("out_forest: k above DP cap " +
                                std::to_string(budgets.dp_k_cap));
  } else if (attempt(SolverId::kOutForest)) {
    return finish(SolverId::kOutForest, std::move(out.result));
  }

  const ModularPartition mp = ComputeModularPartition(inst.graph);
  report.notes.push_back("modular partition " + mp.Summary());
  if (!mp.all_independent()) {
    report.considered.push_back("is_modules: partition has path modules");
  } else if (mp.size() > kMaxIsModules) {
    report.considered.push_back("is_modules: more than " +
                                std::to_string(kMaxIsModules) + " modules");
  } else if (attempt(SolverId::kIsModules)) {
    return finish(SolverId::kIsModules, std::move(out.result));
  }
  if (attempt(SolverId::kModularFpt)) {
    return finish(SolverId::kModularFpt, std::move(out.result));
  }
  if (n > 64) {
    report.considered.push_back("oracle: more than 64 items");
  } else if (attempt(SolverId::kOracle)) {
    return finish(SolverId::kOracle, std::move(out.result));
  }
  throw Error(ErrorCode::kUnsolvableWithinBudget,
              "no solver applies within budget\n" + report.Render());
}

}  // namespace fdag
