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

// fdag: command-line front end for the allocation solvers.
//
// Exit codes: 0 success, 1 rejected decision, 2 input error, 3 budget
// exhausted.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fdag/dag.h"
#include "fdag/dispatch.h"
#include "fdag/error.h"
#include "fdag/generators.h"
#include "fdag/io.h"
#include "fdag/model.h"
#include "fdag/modular.h"
#include "json.hpp"

namespace {

using fdag::Error;
using fdag::ErrorCode;

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct BudgetFlags {
  std::optional<std::uint64_t> oracle;
  std::optional<std::uint64_t> guess;
  std::optional<int> dp_k_cap;
};

std::optional<std::uint64_t> EnvNumber(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const std::uint64_t value = std::stoull(raw, &used);
    if (raw[used] == '\0') return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kInvalidArgument,
              std::string("bad value for ") + name + ": " + raw);
}

// Defaults, then environment, then flags.
fdag::SolverBudgets ResolveBudgets(const BudgetFlags& flags) {
  fdag::SolverBudgets b;
  if (auto v = EnvNumber("FDAG_ORACLE_BUDGET")) b.oracle_budget = *v;
  if (auto v = EnvNumber("FDAG_GUESS_BUDGET")) b.guess_budget = *v;
  if (auto v = EnvNumber("FDAG_DP_K_CAP")) b.dp_k_cap = static_cast<int>(*v);
  if (flags.oracle) b.oracle_budget = *flags.oracle;
  if (flags.guess) b.guess_budget = *flags.guess;
  if (flags.dp_k_cap) b.dp_k_cap = *flags.dp_k_cap;
  return b;
}

void AddBudgetFlags(CLI::App* cmd, BudgetFlags& flags) {
  cmd->add_option("--oracle-budget", flags.oracle,
                  "Search-node limit for the brute-force oracle");
  cmd->add_option("--guess-budget", flags.guess,
                  "Guess limit for the module-based solvers");
  cmd->add_option("--dp-k-cap", flags.dp_k_cap,
                  "Largest k handed to the out-forest DP");
}

int ExitFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kStateSpaceExceeded:
    case ErrorCode::kUnsolvableWithinBudget:
      return kExitBudget;
    default:
      return kExitInput;
  }
}

// Writes to `path`, or to standard output when it is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) {
        throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
      }
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string JoinVertices(const std::vector<fdag::Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string input;
  bool json = false;
  bool report = false;
  BudgetFlags budgets;
};

int RunSolve(const SolveArgs& args) {
  const fdag::Instance inst = fdag::ReadInstanceFile(args.input);
  const fdag::Dispatched d =
      fdag::DispatchSolve(inst, ResolveBudgets(args.budgets));
  std::optional<bool> accepted;
  if (inst.threshold) accepted = d.result.optimum <= *inst.threshold;
  if (args.json) {
    std::cout << fdag::ResultJson(d.result, accepted) << '\n';
  } else {
    fdag::WriteResultText(std::cout, d.result, accepted);
  }
  if (args.report) std::cerr << d.report.Render();
  return accepted.value_or(true) ? kExitOk : kExitRejected;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
  std::string input;
  std::string allocation;
  std::optional<int> threshold;
  bool json = false;
};

int RunVerify(const VerifyArgs& args) {
  fdag::Instance inst = fdag::ReadInstanceFile(args.input);
  if (args.threshold) {
    inst =
        fdag::MakeInstance(std::move(inst.graph), inst.agents, args.threshold);
  }
  const fdag::Allocation alloc =
      fdag::ReadAllocationFile(args.allocation, inst.agents);
  const fdag::DecisionResult r = fdag::VerifyDecision(inst, alloc);
  const int worst = fdag::MaxDissatisfaction(r.profile);
  if (args.json) {
    nlohmann::json j;
    j["decision"] = r.accepted ? "accepted" : "rejected";
    j["threshold"] = *inst.threshold;
    j["max_dissatisfaction"] = worst;
    j["dissatisfaction"] = r.profile;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "decision " << (r.accepted ? "accepted" : "rejected") << '\n'
              << "threshold " << *inst.threshold << '\n'
              << "max_dissatisfaction " << worst << '\n'
              << "dissatisfaction";
    for (int x : r.profile) std::cout << ' ' << x;
    std::cout << '\n';
  }
  return r.accepted ? kExitOk : kExitRejected;
}

// ------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string input;
  bool json = false;
};

int RunClassify(const ClassifyArgs& args) {
  const fdag::Instance inst = fdag::ReadInstanceFile(args.input);
  const fdag::ShapeTags tags = fdag::ClassifyShape(inst.graph);
  const fdag::WidthCertificate cert = fdag::ComputeWidth(inst.graph);
  const fdag::ModularPartition mp = fdag::ComputeModularPartition(inst.graph);
  if (args.json) {
    nlohmann::json j;
    j["n"] = inst.items();
    j["k"] = inst.agents;
    j["tags"] = tags.Names();
    j["width"] = cert.width;
    j["chains"] = cert.chains;
    j["antichain"] = cert.antichain_witness;
    j["modules"] = mp.Summary();
    j["module_count"] = mp.size();
    j["path_modules"] = mp.path_count();
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "n " << inst.items() << " k " << inst.agents << '\n';
  std::cout << "tags";
  for (const auto& t : tags.Names()) std::cout << ' ' << t;
  std::cout << "\nwidth " << cert.width << '\n';
  for (const auto& chain : cert.chains) {
    std::cout << "chain " << JoinVertices(chain) << '\n';
  }
  std::cout << "antichain " << JoinVertices(cert.antichain_witness) << '\n';
  std::cout << "modules " << mp.Summary() << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------ gen

struct GenArgs {
  std::string family;
  int n = 10;
  int k = 2;
  std::optional<int> threshold;
  double p = 0.3;
  double root_prob = 0.2;
  std::uint64_t seed = 1;
  std::vector<int> leaves;
  int singletons = 0;
  int edges = 1;
  std::string modules;
  std::string quotient;
  std::string output;
};

const std::vector<std::string> kFamilies = {
    "random",           "stars",  "matching",   "forest", "width-two",
    "width-two-figure", "blowup", "three-paths"};

// "p3,i2" -> path of 3, independent set of 2.
std::vector<fdag::ModuleSpec> ParseModuleSpecs(const std::string& text) {
  std::vector<fdag::ModuleSpec> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.size() < 2 || (item[0] != 'p' && item[0] != 'i')) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad module spec '" + item + "'");
    }
    out.push_back({item[0] == 'p', std::stoi(item.substr(1))});
  }
  return out;
}

// "0>1,1>2" -> arcs between quotient vertices.
std::vector<fdag::Arc> ParseQuotientArcs(const std::string& text) {
  std::vector<fdag::Arc> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto gt = item.find('>');
    if (gt == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad quotient arc '" + item + "'");
    }
    out.push_back(
        {std::stoi(item.substr(0, gt)), std::stoi(item.substr(gt + 1))});
  }
  return out;
}

int RunGen(const GenArgs& a) {
  std::vector<std::string> comments;
  std::ostringstream what;
  what << "generator " << a.family;
  fdag::Instance inst;
  int k = a.k;
  if (a.family == "three-paths") {
    fdag::ThreePaths tp = fdag::MakeThreePaths(a.k);
    what << " k=" << a.k;
    comments.push_back(what.str());
    comments.push_back("construction max dissatisfaction " +
                       std::to_string(tp.expected_optimum));
    inst = fdag::MakeInstance(std::move(tp.instance.graph), a.k, a.threshold);
  } else {
    fdag::PreferenceGraph g;
    if (a.family == "random") {
      what << " n=" << a.n << " p=" << a.p << " seed=" << a.seed;
      g = fdag::RandomDag(a.n, a.p, a.seed);
    } else if (a.family == "stars") {
      what << " leaves=";
      for (std::size_t i = 0; i < a.leaves.size(); ++i) {
        what << (i ? "," : "") << a.leaves[i];
      }
      what << " singletons=" << a.singletons;
      g = fdag::OutStars(a.leaves, a.singletons);
    } else if (a.family == "matching") {
      what << " edges=" << a.edges;
      g = fdag::DirectedMatching(a.edges);
    } else if (a.family == "forest") {
      what << " n=" << a.n << " root_prob=" << a.root_prob
           << " seed=" << a.seed;
      g = fdag::RandomOutForest(a.n, a.root_prob, a.seed);
    } else if (a.family == "width-two") {
      what << " n=" << a.n << " seed=" << a.seed;
      g = fdag::WidthTwo(a.n, a.seed);
    } else if (a.family == "width-two-figure") {
      g = fdag::WidthTwoFigure();
    } else if (a.family == "blowup") {
      what << " modules=" << a.modules << " quotient=" << a.quotient;
      g = fdag::ModuleBlowup(ParseModuleSpecs(a.modules),
                             ParseQuotientArcs(a.quotient));
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown family " + a.family);
    }
    comments.push_back(what.str());
    inst = fdag::MakeInstance(std::move(g), k, a.threshold);
  }
  Output out(a.output);
  fdag::WriteInstance(out.stream(), inst, comments);
  return kExitOk;
}

// ------------------------------------------------------ reduce-coloring

struct ReduceArgs {
  std::string input;
  int k = 3;
  std::string output;
};

int RunReduce(const ReduceArgs& a) {
  std::ifstream in(a.input);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + a.input);
  const fdag::UndirectedGraph h = fdag::ParseEdgeList(in);
  const fdag::ColoringReduction red = fdag::ReduceColoring(h, a.k);
  const int nv = h.n;
  const int ne = static_cast<int>(h.edges.size());
  std::vector<std::string> comments = {
      "k-colouring reduction of a graph with " + std::to_string(nv) +
          " vertices and " + std::to_string(ne) +
          " edges, k=" + std::to_string(a.k),
      "threshold d = k*|V| - sum of |succ| over copy 0 = " +
          std::to_string(red.diss),
      "copy c of source vertex v is item c*" + std::to_string(nv) + "+v",
      "copy c of edge e is item " + std::to_string(a.k * nv) + "+c*" +
          std::to_string(ne) + "+e",
      "the graph is k-colourable iff some allocation meets the threshold"};
  Output out(a.output);
  fdag::WriteInstance(out.stream(), red.instance, comments);
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string dir;
  bool json = false;
  BudgetFlags budgets;
};

int RunBench(const BenchArgs& a) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(a.dir)) {
    throw Error(ErrorCode::kInvalidArgument, "not a directory: " + a.dir);
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.dir)) {
    if (entry.path().extension() == ".fdag") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  const fdag::SolverBudgets budgets = ResolveBudgets(a.budgets);

  nlohmann::json rows = nlohmann::json::array();
  for (const auto& path : files) {
    nlohmann::json row;
    row["file"] = path.filename().string();
    const auto start = std::chrono::steady_clock::now();
    try {
      const fdag::Instance inst = fdag::ReadInstanceFile(path.string());
      row["n"] = inst.items();
      row["k"] = inst.agents;
      const fdag::Dispatched d = fdag::DispatchSolve(inst, budgets);
      row["solver"] = d.result.solver;
      row["optimum"] = d.result.optimum;
    } catch (const Error& e) {
      row["solver"] = "-";
      row["error"] = std::string(fdag::ErrorCodeName(e.code()));
    }
    const auto stop = std::chrono::steady_clock::now();
    row["ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
    rows.push_back(row);
  }

  if (a.json) {
    std::cout << rows.dump(2) << '\n';
    return kExitOk;
  }
  std::printf("%-32s %5s %4s %-16s %8s %10s\n", "file", "n", "k", "solver",
              "optimum", "ms");
  for (const auto& row : rows) {
    const std::string opt = row.contains("optimum")
                                ? std::to_string(row["optimum"].get<int>())
                                : row.value("error", std::string("-"));
    std::printf(
        "%-32s %5s %4s %-16s %8s %10.2f\n",
        row["file"].get<std::string>().c_str(),
        row.contains("n") ? std::to_string(row["n"].get<int>()).c_str() : "-",
        row.contains("k") ? std::to_string(row["k"].get<int>()).c_str() : "-",
        row["solver"].get<std::string>().c_str(), opt.c_str(),
        row["ms"].get<double>());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Min-max dissatisfaction allocation on a preference DAG"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("-i,--input", solve.input, "Instance file")->required();
  solve_cmd->add_flag("--json", solve.json, "JSON output");
  solve_cmd->add_flag("--report", solve.report,
                      "Print the dispatch report to standard error");
  AddBudgetFlags(solve_cmd, solve.budgets);

  VerifyArgs verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check an allocation against a threshold");
  verify_cmd->add_option("-i,--input", verify.input, "Instance file")
      ->required();
  verify_cmd
      ->add_option("-a,--allocation", verify.allocation, "Allocation file")
      ->required();
  verify_cmd->add_option("-d,--threshold", verify.threshold,
                         "Threshold; overrides the instance file");
  verify_cmd->add_flag("--json", verify.json, "JSON output");

  ClassifyArgs classify;
  auto* classify_cmd =
      app.add_subcommand("classify", "Shape tags, width and modules");
  classify_cmd->add_option("-i,--input", classify.input, "Instance file")
      ->required();
  classify_cmd->add_flag("--json", classify.json, "JSON output");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("family", gen.family, "Generator family")
      ->required()
      ->check(CLI::IsMember(kFamilies));
  gen_cmd->add_option("-n", gen.n, "Item count");
  gen_cmd->add_option("-k,--agents", gen.k, "Agent count");
  gen_cmd->add_option("-d,--threshold", gen.threshold, "Decision threshold");
  gen_cmd->add_option("-p", gen.p, "Arc probability (random)");
  gen_cmd->add_option("--root-prob", gen.root_prob,
                      "Root probability (forest)");
  gen_cmd->add_option("-s,--seed", gen.seed, "Seed");
  gen_cmd->add_option("--leaves", gen.leaves, "Leaf counts (stars)")
      ->delimiter(',');
  gen_cmd->add_option("--singletons", gen.singletons,
                      "Isolated vertices (stars)");
  gen_cmd->add_option("--edges", gen.edges, "Arc count (matching)");
  gen_cmd->add_option("--modules", gen.modules,
                      "Module list such as p3,i2 (blowup)");
  gen_cmd->add_option("--quotient", gen.quotient,
                      "Quotient arcs such as 0>1,1>2 (blowup)");
  gen_cmd->add_option("-o,--output", gen.output, "Output file");

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand(
      "reduce-coloring", "Build the allocation instance for k-colouring");
  reduce_cmd->add_option("-i,--input", reduce.input, "Edge list")->required();
  reduce_cmd->add_option("-k", reduce.k, "Colours");
  reduce_cmd->add_option("-o,--output", reduce.output, "Output file");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time every .fdag file");
  bench_cmd->add_option("dir", bench.dir, "Fixture directory")->required();
  bench_cmd->add_flag("--json", bench.json, "JSON output");
  AddBudgetFlags(bench_cmd, bench.budgets);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*verify_cmd) return RunVerify(verify);
    if (*classify_cmd) return RunClassify(classify);
    if (*gen_cmd) return RunGen(gen);
    if (*reduce_cmd) return RunReduce(reduce);
    if (*bench_cmd) return RunBench(bench);
  } catch (const Error& e) {
    std::cerr << "error " << fdag::ErrorCodeName(e.code()) << ": " << e.what()
              << '\n';
    return ExitFor(e);
  } catch (const std::exception& e) {
    std::cerr << "error Internal: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
