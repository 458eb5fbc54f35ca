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

// Command-line front end.  Exit codes: 0 success, 1 a failed assertion or
// suite, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "boundfn/literal.hpp"
#include "boundfn/oracle.hpp"
#include "boundfn/scenario.hpp"

namespace {

using namespace boundfn;

struct Flags {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> budget;
  std::size_t depth_cap = kDefaultDepthCap;
  std::string json_path;
  std::string system = ";2";
  bool system_given = false;
};

bool WriteJson(const Flags& flags, const std::string& text) {
  if (flags.json_path.empty()) return true;
  std::ofstream out(flags.json_path);
  if (!out) {
    std::cerr << "error: cannot write " << flags.json_path << "\n";
    return false;
  }
  out << text;
  return true;
}

ScenarioOptions ToScenarioOptions(const Flags& flags, bool override_system) {
  ScenarioOptions o;
  o.seed = flags.seed;
  o.budget = flags.budget;
  o.depth_cap = flags.depth_cap;
  if (override_system && flags.system_given) o.system = flags.system;
  return o;
}

int Finish(const Flags& flags, const ScenarioResult& r) {
  if (!WriteJson(flags, ScenarioResultToJson(r))) return 2;
  return r.exit_code;
}

int RunSuites(const Flags& flags, const std::string& name) {
  RefinementSystem sys = RefinementSystem::Binary();
  try {
    sys = ParseSystem(flags.system);
  } catch (const Error& e) {
    std::cerr << "error: --system: " << e.what() << "\n";
    return 2;
  }
  std::vector<std::string> names;
  if (name == "all") {
    names = SuiteNames();
  } else if (IsSuiteName(name)) {
    names = {name};
  } else {
    std::cerr << "error: unknown suite '" << name << "'\n";
    return 2;
  }
  SuiteOptions options;
  options.seed = flags.seed.value_or(1);
  options.budget = flags.budget.value_or(0);
  options.depth_cap = flags.depth_cap;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  bool passed = true;
  for (const std::string& n : names) {
    const SuiteReport r = RunSuite(n, sys, options);
    std::cout << ReportSummary(r) << "\n";
    passed = passed && r.passed();
    reports.push_back(nlohmann::ordered_json::parse(ReportToJson(r)));
  }
  const std::string json = names.size() == 1 ? reports[0].dump(2) + "\n"
                                             : reports.dump(2) + "\n";
  if (!WriteJson(flags, json)) return 2;
  return passed ? 0 : 1;
}

std::string Quote(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& w : words) out += (out.empty() ? "" : " ") + w;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary functions of ideal sets in refinement limit algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  std::uint64_t seed = 1;
  std::size_t budget = 0;
  app.add_option("--seed", seed, "Seed for suites and sampled checks");
  app.add_option("--budget", budget, "Instance budget for suites (0 = default)");
  app.add_option("--depth-cap", flags.depth_cap, "Depth cap for membership searches");
  app.add_option("--json", flags.json_path, "Write machine-readable results to PATH");
  app.add_option("--system", flags.system, "Refinement system literal, e.g. ';2' or ';2.3'");

  std::string path;
  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("file", path, "Scenario file")->required();

  std::string suite_name;
  auto* suite = app.add_subcommand("suite", "Run a property suite, or all of them");
  suite->add_option("name", suite_name, "Suite name or 'all'")->required();

  std::string group;
  auto* examples = app.add_subcommand("paper-examples", "Run the worked-example fixtures");
  examples->add_option("group", group, "section2, section3 or all")
      ->required()
      ->check(CLI::IsMember({"section2", "section3", "all"}));

  std::string fixture_name;
  bool list = false;
  auto* fixture = app.add_subcommand("fixture", "Print a fixture scenario");
  fixture->add_option("name", fixture_name, "Fixture name");
  fixture->add_flag("--list", list, "List fixture names");

  std::string kind;
  std::string argument;
  auto* classify = app.add_subcommand("classify", "Classify a boundary function or ideal set");
  classify->add_option("kind", kind, "meet, join, meet-ideal or join-ideal")
      ->required()
      ->check(CLI::IsMember({"meet", "join", "meet-ideal", "join-ideal"}));
  classify->add_option("literal", argument, "Boundary function or ideal literal")->required();

  std::vector<std::string> words;
  auto* op = app.add_subcommand("op", "Run one scenario command, e.g. op boundary 'strip(a=2|1, b=2|1)'");
  op->add_option("command", words, "Command and arguments")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (app.count("--seed") > 0) flags.seed = seed;
  if (app.count("--budget") > 0) flags.budget = budget;
  flags.system_given = app.count("--system") > 0;

  try {
    if (*run) {
      return Finish(flags, RunScenarioFile(path, ToScenarioOptions(flags, true), std::cout));
    }
    if (*suite) return RunSuites(flags, suite_name);
    if (*examples) {
      return Finish(flags, RunPaperExamples(group, ToScenarioOptions(flags, false), std::cout));
    }
    if (*fixture) {
      if (list) {
        for (const std::string& name : FixtureNames()) std::cout << name << "\n";
        return 0;
      }
      if (fixture_name.empty()) {
        std::cerr << "error: fixture name required (or --list)\n";
        return 2;
      }
      std::cout << EmitFixture(fixture_name);
      return 0;
    }
    // classify and op run as one-line scenarios against --system.
    const std::string command =
        *classify ? "classify " + kind + " " + argument : Quote(words);
    const std::string text = "system " + flags.system + "\n" + command + "\n";
    return Finish(flags, RunScenario(text, ToScenarioOptions(flags, false), std::cout));
  } catch (const Error& e) {
    std::cerr << "error: " << ErrorKindName(e.kind()) << ": " << e.what() << "\n";
    return 2;
  }
}
