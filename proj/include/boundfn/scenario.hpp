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

#ifndef BOUNDFN_SCENARIO_HPP_
#define BOUNDFN_SCENARIO_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "boundfn/ideal.hpp"

namespace boundfn {

// Scenario files are line oriented.  Blank lines and lines starting with '#'
// are ignored.  Every other line is one of
//
//   system ;2                          must come before anything else
//   point a = 2|1                      bind a literal (see literal.hpp)
//   ideal s = strip(a=a, b=a)
//   bf phi = {[|1, |2] -> id}
//   bf psi := boundary s               bind the result of a command
//   <command> [=> expected]
//
// Commands and what they print:
//
//   show BF                            bf, in normal form
//   eval BF POINT                      point
//   member IDEAL POINT POINT           yes | no | unknown
//   boundary IDEAL                     bf
//   minus BF / plus BF                 bf
//   lattice join|meet BF BF            bf
//   validate BF                        ok | first violation kind
//   classify meet|join BF              irreducible FORM ... | reducible
//   classify meet-ideal|join-ideal IDEAL
//                                      Irreducible | Reducible | NotInCatalog
//   equiv BF BF                        true | false
//   sandwich IDEAL BF                  yes | no | unknown
//   suite NAME|all [seed=N] [budget=N] pass | fail
//   paper-examples section2|section3|all
//                                      pass | fail
//
// Arguments are separated by spaces; literals containing spaces must be the
// last argument or be bound to a name first.  An expected value after "=>"
// turns the command into an assertion: points and boundary functions are
// compared as parsed objects, classify output by its leading words, and
// everything else as text.

struct ScenarioOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> budget;
  std::size_t depth_cap = kDefaultDepthCap;
  std::optional<std::string> system;  // overrides the file's system line
};

struct CommandResult {
  std::size_t line = 0;
  std::string command;
  std::string output;
  std::optional<std::string> expected;
  bool ok = true;
};

struct ScenarioResult {
  int exit_code = 0;  // 0 ok, 1 assertion or suite failure, 2 input error
  std::vector<CommandResult> results;
  std::string error;  // set when exit_code == 2
};

// Runs the scenario, echoing one line per command to out.
ScenarioResult RunScenario(std::string_view text, const ScenarioOptions& options,
                           std::ostream& out);
ScenarioResult RunScenarioFile(const std::string& path,
                               const ScenarioOptions& options, std::ostream& out);
std::string ScenarioResultToJson(const ScenarioResult& result);

const std::vector<std::string>& FixtureNames();
// Scenario text for a named example; throws kConstraint for an unknown name.
std::string EmitFixture(const std::string& name);

// Runs the fixtures of one group ("section2", "section3" or "all").
ScenarioResult RunPaperExamples(const std::string& group,
                                const ScenarioOptions& options, std::ostream& out);

}  // namespace boundfn

#endif  // BOUNDFN_SCENARIO_HPP_
