//
// Copyright 2026 The boundfn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <gtest/gtest.h>

#include <sstream>

#include "boundfn/scenario.hpp"

namespace boundfn {
namespace {

ScenarioResult RunText(const std::string& text, ScenarioOptions options = {}) {
  std::ostringstream sink;
  return RunScenario(text, options, sink);
}

TEST(Scenario, BindingsAndAssertions) {
  const ScenarioResult r = RunText(R"(
# comment
system ;2
point a = 2|1
ideal s = strip(a=a, b=a)
bf phi := boundary s
eval phi a => 1|2
member s a a => no
equiv phi phi => true
lattice join phi {[|1, |2] -> id} => {[|1, |2] -> id}
classify meet phi => irreducible PhiAB
)");
  EXPECT_EQ(r.exit_code, 0) << r.error;
  ASSERT_EQ(r.results.size(), 5u);
  EXPECT_EQ(r.results[0].command, "eval phi a");
  EXPECT_EQ(r.results[0].output, "1|2");
  EXPECT_EQ(r.results[0].line, 7u);
}

TEST(Scenario, FailedAssertionExitsOne) {
  const ScenarioResult r = RunText("system ;2\nmember full |1 2|1 => no\n");
  EXPECT_EQ(r.exit_code, 1);
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_FALSE(r.results[0].ok);
  EXPECT_EQ(r.results[0].output, "yes");
}

TEST(Scenario, InputErrorsCarryLineAndColumn) {
  ScenarioResult r = RunText("system ;2\npoint a = 2|\n");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.error.rfind("line 2, column 11", 0), 0u) << r.error;

  r = RunText("system ;2\neval nosuch |1\n");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.error.find("UnresolvedName"), std::string::npos) << r.error;

  r = RunText("system ;2\nfrobnicate\n");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.error.find("unknown command"), std::string::npos);

  r = RunText("point a = |1\n");
  EXPECT_EQ(r.exit_code, 2);

  r = RunText("system ;2\npoint a = |1\npoint a = |2\n");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.error.find("already bound"), std::string::npos);
}

TEST(Scenario, SystemOverride) {
  ScenarioOptions options;
  options.system = ";3";
  const ScenarioResult r = RunText("system ;2\neval {[|1, |3] -> id} 3|1 => 3|1\n", options);
  EXPECT_EQ(r.exit_code, 0) << r.error;
}

TEST(Scenario, SuiteCommand) {
  const ScenarioResult r = RunText("system ;2\nsuite lemma10 seed=4 budget=3 => pass\n");
  EXPECT_EQ(r.exit_code, 0) << r.error;
  EXPECT_EQ(RunText("system ;2\nsuite lemma10 colour=4\n").exit_code, 2);
}

TEST(Scenario, JsonIsStable) {
  const std::string text = "system ;2\nboundary empty\nmember full |1 |2 => yes\n";
  const std::string a = ScenarioResultToJson(RunText(text));
  EXPECT_EQ(a, ScenarioResultToJson(RunText(text)));
  EXPECT_NE(a.find("\"expected\": \"yes\""), std::string::npos);
}

TEST(Fixtures, AllPass) {
  for (const std::string& name : FixtureNames()) {
    const ScenarioResult r = RunText(EmitFixture(name));
    EXPECT_EQ(r.exit_code, 0) << name << " " << r.error;
    EXPECT_FALSE(r.results.empty()) << name;
  }
  EXPECT_THROW(EmitFixture("nosuch"), Error);
  std::ostringstream sink;
  EXPECT_EQ(RunPaperExamples("all", {}, sink).exit_code, 0);
}

}  // namespace
}  // namespace boundfn
