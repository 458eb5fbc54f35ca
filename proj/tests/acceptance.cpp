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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "boundfn/boundary.hpp"
#include "boundfn/irreducible.hpp"
#include "boundfn/literal.hpp"
#include "boundfn/oracle.hpp"
#include "boundfn/scenario.hpp"

namespace {

using namespace boundfn;

const RefinementSystem kBin = RefinementSystem::Binary();

// Accumulates the outcome of one criterion.
struct Outcome {
  bool ok = true;
  std::string note;

  void Require(bool condition, const std::string& what) {
    if (!condition && ok) note = what;
    ok = ok && condition;
  }
  void Suite(const SuiteReport& r) {
    Require(r.passed(), ReportSummary(r));
    checks += r.checks;
  }
  std::size_t checks = 0;
};

SuiteReport Run(const std::string& name, const RefinementSystem& sys, std::size_t budget,
                std::size_t samples, std::uint64_t seed = 1) {
  SuiteOptions o;
  o.seed = seed;
  o.budget = budget;
  o.samples = samples;
  return RunSuite(name, sys, o);
}

// Every ideal-closed pair set of BIN at levels 1 and 2 against the brute
// force boundary, at points of every cylinder.
Outcome OracleExhaustive() {
  Outcome out;
  const Point pmin = PMin(kBin);
  const Point pmax = PMax(kBin);
  std::size_t sets = 0;
  for (std::size_t level = 1; level <= 2; ++level) {
    const FiniteModel model = BuildFiniteModel(kBin, level);
    std::vector<WordPair> candidates;
    for (const auto& [i, j] : model.p_pairs) {
      candidates.push_back({model.words[i], model.words[j]});
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << candidates.size()); ++mask) {
      std::set<WordPair> pairs;
      for (std::size_t b = 0; b < candidates.size(); ++b) {
        if (mask >> b & 1) pairs.insert(candidates[b]);
      }
      if (!BruteIsClosed(model, pairs)) continue;
      ++sets;
      const MatrixUnitSet s{level, pairs, SetMode::kIdeal};
      out.Require(CloseFiniteLevel(kBin, level, pairs) == s, "closure differs");
      const PiecewiseBF phi = BoundaryOf(kBin, IdealExpr::FiniteLevel(s));
      for (const Word& v : model.words) {
        const std::optional<Word> best = BruteBoundary(model, s, v);
        for (const Point& tail : {pmin, pmax, GenericTail()}) {
          const Point y = Splice(kBin, v, tail);
          Point expected = pmin;
          if (best) expected = *best == v ? y : Splice(kBin, *best, pmax);
          ++out.checks;
          out.Require(EvalBF(kBin, phi, y) == expected,
                      FormatIdealExpr(IdealExpr::FiniteLevel(s)) + " at " + FormatPoint(y));
        }
      }
    }
  }
  if (out.ok) out.note = std::to_string(sets) + " closed sets";
  return out;
}

Outcome CornerException() {
  Outcome out;
  const IdealExpr corner =
      IdealExpr::Corner(kBin, ParsePoint(kBin, "2|1"), ParsePoint(kBin, "21|2"));
  const IdealClassification c = ClassifyJoinIdeal(kBin, corner);
  out.Require(c.verdict == IdealClass::kReducible, "exception corner not reducible");
  out.Require(c.decomposition.size() == 2, "decomposition missing");
  SampleOptions sampling;
  sampling.seed = 1;
  sampling.samples = 500;
  const auto bad =
      CheckDecomposition(kBin, corner, CombineOp::kUnion, c.decomposition, sampling);
  out.Require(bad.has_value(), "a decomposition part equals the corner on all samples");
  out.Require(bad && *bad == 0, "decomposition disagrees with membership");
  return out;
}

Outcome Fixtures() {
  Outcome out;
  for (const std::string& name : FixtureNames()) {
    std::ostringstream sink;
    const ScenarioResult r = RunScenario(EmitFixture(name), {}, sink);
    out.Require(r.exit_code == 0, "fixture " + name + " exit " + std::to_string(r.exit_code));
    out.checks += r.results.size();
  }
  std::ostringstream sink;
  out.Require(RunPaperExamples("section3", {}, sink).exit_code == 0, "section3 group failed");
  return out;
}

Outcome Determinism() {
  Outcome out;
  for (const std::string& name : SuiteNames()) {
    SuiteOptions o;
    o.seed = 7;
    const std::string first = ReportToJson(RunSuite(name, kBin, o));
    const std::string second = ReportToJson(RunSuite(name, kBin, o));
    ++out.checks;
    out.Require(first == second, name + " report differs between runs");
  }
  return out;
}

}  // namespace

int main() {
  const RefinementSystem alt = ParseSystem(";2.3");
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"oracle equivalence, exhaustive BIN levels 1-2", OracleExhaustive},
      {"boundary of every ideal set validates (200 sets x 500 samples, BIN and ;2.3)",
       [&] {
         Outcome o;
         o.Suite(Run("prop1", kBin, 200, 500));
         o.Suite(Run("prop1", alt, 200, 500));
         return o;
       }},
      {"sandwich: exact open/closed boundaries, inclusions on 1000 pairs (50 functions)",
       [&] {
         Outcome o;
         o.Suite(Run("prop6", kBin, 50, 500));
         o.Suite(Run("prop4_5", kBin, 50, 1000));
         o.Suite(Run("prop7", kBin, 50, 500));
         return o;
       }},
      {"plus/minus identities (50) and equiv iff between (100)",
       [&] {
         Outcome o;
         o.Suite(Run("lemma10", kBin, 50, 500));
         o.Suite(Run("prop11", kBin, 100, 500));
         return o;
       }},
      {"union/intersection boundaries are join/meet (100 pairs)",
       [&] {
         Outcome o;
         o.Suite(Run("lemma12", kBin, 100, 500));
         return o;
       }},
      {"irreducibility verdicts certified, corner exception decomposed on 500 samples",
       [&] {
         Outcome o = CornerException();
         Outcome s;
         s.Suite(Run("prop13", kBin, 50, 500));
         s.Suite(Run("prop14", kBin, 50, 500));
         s.Suite(Run("prop15", kBin, 0, 500));
         o.Require(s.ok, s.note);
         return o;
       }},
      {"cocycle: monotone, analytic, additive, gap sets, order agreement, exact values",
       [&] {
         Outcome o;
         o.Suite(Run("cocycle", kBin, 1000, 500));
         return o;
       }},
      {"worked-example fixtures all pass", Fixtures},
      {"suite reports are byte-identical on re-run", Determinism},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::printf("%s [%zu] %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].title, seconds, o.note.empty() ? "" : ": ", o.note.c_str());
  }
  return all ? 0 : 1;
}
