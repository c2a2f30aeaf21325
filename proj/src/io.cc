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

#include "fdag/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include "fdag/error.h"
#include "json.hpp"

namespace fdag {
namespace {

// Splits the next non-empty, comment-stripped line into tokens.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool Next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.resize(hash);
      }
      std::istringstream ss(line);
      tokens.clear();
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line_no_) + ": " + what);
  }

  int ToInt(std::string_view s) const {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      Fail("expected an integer, got '" + std::string(s) + "'");
    }
    return value;
  }

  int line_no() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return in;
}

}  // namespace

Instance ParseInstance(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.Next(tok) || tok.size() != 2 || tok[0] != "fdag") {
    reader.Fail("expected header 'fdag 1'");
  }
  if (tok[1] != "1") reader.Fail("unsupported format version " + tok[1]);

  if (!reader.Next(tok)) reader.Fail("missing 'n <items> k <agents>' line");
  std::optional<int> n, k, d;
  if (tok.size() % 2 != 0) reader.Fail("malformed size line");
  for (std::size_t i = 0; i < tok.size(); i += 2) {
    const int value = reader.ToInt(tok[i + 1]);
    if (tok[i] == "n") {
      n = value;
    } else if (tok[i] == "k") {
      k = value;
    } else if (tok[i] == "d") {
      d = value;
    } else {
      reader.Fail("unknown key '" + tok[i] + "'");
    }
  }
  if (!n || !k) reader.Fail("size line needs both n and k");
  if (*n < 0) reader.Fail("negative item count");

  std::vector<Arc> arcs;
  while (reader.Next(tok)) {
    if (tok.size() != 3 || tok[0] != "a") reader.Fail("expected 'a <u> <v>'");
    arcs.push_back({reader.ToInt(tok[1]), reader.ToInt(tok[2])});
  }
  return MakeInstance(PreferenceGraph::Build(*n, arcs), *k, d);
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseInstance(in);
}

void WriteInstance(std::ostream& out, const Instance& inst,
                   const std::vector<std::string>& comments) {
  out << "fdag 1\n";
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "n " << inst.items() << " k " << inst.agents;
  if (inst.threshold) out << " d " << *inst.threshold;
  out << '\n';
  std::vector<Arc> arcs(inst.graph.arcs().begin(), inst.graph.arcs().end());
  std::sort(arcs.begin(), arcs.end());
  for (const Arc& a : arcs) out << "a " << a.tail << ' ' << a.head << '\n';
}

Allocation ParseAllocation(std::istream& in, int agents) {
  LineReader reader(in);
  Allocation alloc = Allocation::Empty(agents);
  std::vector<bool> seen(agents, false);
  std::vector<std::string> tok;
  while (reader.Next(tok)) {
    if (tok[0] == "optimum" || tok[0] == "solver" || tok[0] == "lower_bound" ||
        tok[0] == "dissatisfaction" || tok[0] == "decision") {
      continue;
    }
    if (tok[0] != "agent" || tok.size() < 2 || tok[1].empty() ||
        tok[1].back() != ':') {
      reader.Fail("expected 'agent <i>: <items>'");
    }
    const int agent =
        reader.ToInt(std::string_view(tok[1]).substr(0, tok[1].size() - 1));
    if (agent < 0 || agent >= agents) {
      reader.Fail("agent " + std::to_string(agent) + " out of range");
    }
    if (seen[agent])
      reader.Fail("agent " + std::to_string(agent) + " repeated");
    seen[agent] = true;
    for (std::size_t i = 2; i < tok.size(); ++i) {
      alloc.bundles[agent].push_back(reader.ToInt(tok[i]));
    }
  }
  // Keep the order the caller wrote; ValidateAllocation reports duplicates.
  return alloc;
}

Allocation ReadAllocationFile(const std::string& path, int agents) {
  std::ifstream in = OpenOrThrow(path);
  return ParseAllocation(in, agents);
}

void WriteAllocation(std::ostream& out, const Allocation& alloc) {
  for (int i = 0; i < alloc.agents(); ++i) {
    out << "agent " << i << ':';
    for (Vertex v : alloc.bundles[i]) out << ' ' << v;
    out << '\n';
  }
}

void WriteResultText(std::ostream& out, const SolveResult& result,
                     std::optional<bool> accepted) {
  out << "optimum " << result.optimum << '\n';
  out << "solver " << result.solver << '\n';
  if (!result.lower_bound_note.empty()) {
    out << "lower_bound " << result.lower_bound_note << '\n';
  }
  out << "dissatisfaction";
  for (int d : result.profile) out << ' ' << d;
  out << '\n';
  if (accepted)
    out << "decision " << (*accepted ? "accepted" : "rejected") << '\n';
  WriteAllocation(out, result.allocation);
}

std::string ResultJson(const SolveResult& result,
                       std::optional<bool> accepted) {
  nlohmann::json j;
  j["optimum"] = result.optimum;
  j["solver"] = result.solver;
  if (!result.lower_bound_note.empty()) {
    j["lower_bound"] = result.lower_bound_note;
  }
  j["dissatisfaction"] = result.profile;
  j["agents"] = result.allocation.bundles;
  if (accepted) j["decision"] = *accepted ? "accepted" : "rejected";
  return j.dump(2);
}

UndirectedGraph ParseEdgeList(std::istream& in) {
  LineReader reader(in);
  UndirectedGraph h;
  std::optional<int> declared;
  int max_vertex = -1;
  std::vector<std::string> tok;
  while (reader.Next(tok)) {
    if (tok.size() == 2 && tok[0] == "n") {
      declared = reader.ToInt(tok[1]);
      continue;
    }
    if (tok.size() != 2) reader.Fail("expected '<u> <v>'");
    const int u = reader.ToInt(tok[0]);
    const int v = reader.ToInt(tok[1]);
    if (u < 0 || v < 0) reader.Fail("negative vertex");
    if (u == v) reader.Fail("self-loop");
    h.edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  h.n = declared.value_or(max_vertex + 1);
  if (max_vertex >= h.n) {
    throw Error(ErrorCode::kParseError, "edge endpoint exceeds declared n");
  }
  return h;
}

}  // namespace fdag
