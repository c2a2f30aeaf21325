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

#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "fdag/error.h"
#include "fdag/generators.h"
#include "json.hpp"

namespace fdag {
namespace {

Instance Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseInstance(in);
}

ErrorCode ParseCode(const std::string& text) {
  try {
    Parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::kInvalidArgument;
}

TEST(InstanceFormat, ParsesWithComments) {
  const Instance inst = Parse(
      "# leading comment\n"
      "fdag 1\n"
      "n 3 k 2 d 1   # sizes\n"
      "\n"
      "a 0 1\n"
      "a 0 2 # arc\n");
  EXPECT_EQ(inst.items(), 3);
  EXPECT_EQ(inst.agents, 2);
  ASSERT_TRUE(inst.threshold);
  EXPECT_EQ(*inst.threshold, 1);
  EXPECT_EQ(inst.graph.arc_count(), 2);
}

TEST(InstanceFormat, RoundTrips) {
  const Instance inst = MakeInstance(RandomDag(15, 0.3, 11), 4, 7);
  std::ostringstream out;
  WriteInstance(out, inst, {"random n=15"});
  const Instance back = Parse(out.str());
  EXPECT_EQ(back.items(), inst.items());
  EXPECT_EQ(back.agents, inst.agents);
  EXPECT_EQ(back.threshold, inst.threshold);
  std::ostringstream again;
  WriteInstance(again, back, {"random n=15"});
  EXPECT_EQ(again.str(), out.str());
}

TEST(InstanceFormat, RejectsMalformedInput) {
  EXPECT_EQ(ParseCode(""), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("fdag 2\nn 1 k 1\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("fdag 1\nn 3\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("fdag 1\nn 3 k x\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("fdag 1\nn 3 k 1\na 0\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("fdag 1\nn 3 k 1\nb 0 1\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("fdag 1\nn 2 k 1\na 0 1\na 1 0\n"),
            ErrorCode::kCycleDetected);
  EXPECT_EQ(ParseCode("fdag 1\nn 2 k 1\na 0 5\n"), ErrorCode::kInvalidVertex);
  EXPECT_EQ(ParseCode("fdag 1\nn 2 k 0\n"), ErrorCode::kInvalidArgument);
}

TEST(AllocationFormat, ParsesAndSkipsResultKeys) {
  std::istringstream in(
      "optimum 1\nsolver x\ndissatisfaction 1 0\n"
      "agent 1: 2 0\n# note\nagent 0:\n");
  const Allocation a = ParseAllocation(in, 3);
  ASSERT_EQ(a.agents(), 3);
  EXPECT_TRUE(a.bundles[0].empty());
  EXPECT_EQ(a.bundles[1], (std::vector<Vertex>{2, 0}));
  EXPECT_TRUE(a.bundles[2].empty());

  std::istringstream bad("agent 4: 1\n");
  EXPECT_THROW(ParseAllocation(bad, 2), Error);
  std::istringstream twice("agent 0: 1\nagent 0: 2\n");
  EXPECT_THROW(ParseAllocation(twice, 2), Error);
}

TEST(ResultFormat, TextFeedsBackAsAllocation) {
  SolveResult r;
  r.optimum = 1;
  r.solver = "two_agents";
  r.lower_bound_note = "note";
  r.profile = {1, 0};
  r.allocation = Allocation{{{0, 3}, {1}}};
  std::ostringstream out;
  WriteResultText(out, r, true);
  EXPECT_NE(out.str().find("optimum 1\n"), std::string::npos);
  EXPECT_NE(out.str().find("decision accepted\n"), std::string::npos);
  std::istringstream in(out.str());
  EXPECT_EQ(ParseAllocation(in, 2), r.allocation);

  const auto j = nlohmann::json::parse(ResultJson(r));
  EXPECT_EQ(j["optimum"], 1);
  EXPECT_EQ(j["solver"], "two_agents");
  EXPECT_EQ(j["dissatisfaction"], nlohmann::json({1, 0}));
  EXPECT_EQ(j["agents"][0], nlohmann::json({0, 3}));
  EXPECT_FALSE(j.contains("decision"));
}

TEST(EdgeList, Parses) {
  std::istringstream in("# triangle\n0 1\n1 2\n0 2\n");
  const UndirectedGraph h = ParseEdgeList(in);
  EXPECT_EQ(h.n, 3);
  EXPECT_EQ(h.edges.size(), 3u);
  std::istringstream with_n("n 5\n0 1\n");
  EXPECT_EQ(ParseEdgeList(with_n).n, 5);
  std::istringstream loop("1 1\n");
  EXPECT_THROW(ParseEdgeList(loop), Error);
  std::istringstream small("n 1\n0 1\n");
  EXPECT_THROW(ParseEdgeList(small), Error);
}

}  // namespace
}  // namespace fdag
