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

// Text formats: instances (.fdag), allocations, solve results, and plain
// undirected edge lists.
//
// Instance file:
//   fdag 1
//   n <items> k <agents> [d <threshold>]
//   a <u> <v>            one line per arc u -> v
// Allocation file:
//   agent <i>: <v1> <v2> ...
// '#' starts a comment anywhere on a line.

#ifndef FDAG_IO_H_
#define FDAG_IO_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fdag/dispatch.h"
#include "fdag/generators.h"
#include "fdag/model.h"

namespace fdag {

// Throws kParseError, or the graph / instance validation errors.
Instance ParseInstance(std::istream& in);
Instance ReadInstanceFile(const std::string& path);

void WriteInstance(std::ostream& out, const Instance& inst,
                   const std::vector<std::string>& comments = {});

// Agents not listed receive nothing. Result keys written by WriteResultText
// (optimum, solver, lower_bound, dissatisfaction, decision) are skipped, so a
// saved result can be fed back as an allocation.
Allocation ParseAllocation(std::istream& in, int agents);
Allocation ReadAllocationFile(const std::string& path, int agents);

void WriteAllocation(std::ostream& out, const Allocation& alloc);

// `accepted` is the decision outcome when the instance carries a threshold.
void WriteResultText(std::ostream& out, const SolveResult& result,
                     std::optional<bool> accepted = std::nullopt);
std::string ResultJson(const SolveResult& result,
                       std::optional<bool> accepted = std::nullopt);

// Lines "u v", plus an optional "n <count>" line; otherwise the vertex count
// is one more than the largest endpoint.
UndirectedGraph ParseEdgeList(std::istream& in);

}  // namespace fdag

#endif  // FDAG_IO_H_
