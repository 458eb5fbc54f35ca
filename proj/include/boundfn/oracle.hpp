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

#ifndef BOUNDFN_ORACLE_HPP_
#define BOUNDFN_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "boundfn/ideal.hpp"
#include "boundfn/order.hpp"
#include "boundfn/piecewise.hpp"
#include "boundfn/sample.hpp"

namespace boundfn {

// All words of one level, listed in lexicographic order by an odometer, and
// the pairs (u, v) with u <= v.  Independent of the symbolic engine.
struct FiniteModel {
  RefinementSystem sys;
  std::size_t level = 0;
  std::vector<Word> words;
  std::vector<std::pair<std::size_t, std::size_t>> p_pairs;  // word indices
};

inline constexpr std::size_t kDefaultModelCap = 10000;

FiniteModel BuildFiniteModel(const RefinementSystem& sys, std::size_t level,
                             std::size_t cap = kDefaultModelCap);

// Index of w in model.words; throws kLevelMismatch for a word of another
// length.
std::size_t WordIndex(const FiniteModel& model, const Word& w);

// Closure under (u, v) -> (u', v') with u' <= u and v <= v', computed by
// scanning the model's word list.
std::set<WordPair> BruteClose(const FiniteModel& model,
                              const std::set<WordPair>& generators);
bool BruteIsClosed(const FiniteModel& model, const std::set<WordPair>& pairs);

// max{u : (u, v) in S}, or nullopt when there is none.
std::optional<Word> BruteBoundary(const FiniteModel& model,
                                  const MatrixUnitSet& s, const Word& v);

// count points from a deterministic stream.  Every batch holds p_min, p_max,
// a point with a gap above, a point with a gap below, and pairs of points
// sharing a tail.
std::vector<Point> SamplePoints(const RefinementSystem& sys, std::uint64_t seed,
                                std::size_t count, std::size_t max_preamble,
                                std::size_t max_period);

// Random inputs for the suites.  depth bounds the nesting of unions,
// intersections and sets built from boundary functions.
IdealExpr RandomIdealExpr(const RefinementSystem& sys, PointSampler& sampler,
                          SetMode mode, int depth = 2);
// A boundary function: the boundary of a random ideal expression, sometimes
// followed by phi^- or phi^+.
PiecewiseBF RandomBF(const RefinementSystem& sys, PointSampler& sampler,
                     SetMode mode = SetMode::kIdeal, int depth = 2);

// Seed for instance `index` of a run started with `seed`.
std::uint64_t InstanceSeed(std::uint64_t seed, std::uint64_t index);

struct SuiteViolation {
  std::size_t index = 0;  // instance number; replay with InstanceSeed
  std::string kind;
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::string system;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::vector<SuiteViolation> violations;

  bool passed() const { return violations.empty(); }
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  // Number of random instances; 0 selects the suite's default.
  std::size_t budget = 0;
  // Sampled points or pairs per instance.
  std::size_t samples = 500;
  std::size_t depth_cap = kDefaultDepthCap;
};

const std::vector<std::string>& SuiteNames();
bool IsSuiteName(const std::string& name);
std::size_t DefaultBudget(const std::string& suite);

// Throws kConstraint for an unknown suite name.  Violations are reported,
// never thrown.
SuiteReport RunSuite(const std::string& name, const RefinementSystem& sys,
                     const SuiteOptions& options = {});

// Stable key order and formatting, so equal reports serialize to equal bytes.
std::string ReportToJson(const SuiteReport& report);
std::string ReportSummary(const SuiteReport& report);

}  // namespace boundfn

#endif  // BOUNDFN_ORACLE_HPP_
