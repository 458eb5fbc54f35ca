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

// Ideal sets (and A-module sets) as a closed class of expressions with
// decidable membership.

#ifndef BOUNDFN_IDEAL_HPP_
#define BOUNDFN_IDEAL_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "boundfn/order.hpp"
#include "boundfn/piecewise.hpp"

namespace boundfn {

using WordPair = std::pair<Word, Word>;

// Pairs (u, v) of level-N words; the finite shadow of an ideal set.
struct MatrixUnitSet {
  std::size_t level = 0;
  std::set<WordPair> pairs;
  SetMode mode = SetMode::kIdeal;

  bool Contains(const Word& u, const Word& v) const {
    return pairs.count({u, v}) > 0;
  }
  bool operator==(const MatrixUnitSet&) const = default;
};

// Smallest superset of `generators` closed under (u, v) -> (u', v') with
// u' <= u and v <= v'.
MatrixUnitSet CloseFiniteLevel(const RefinementSystem& sys, std::size_t level,
                               const std::set<WordPair>& generators,
                               SetMode mode = SetMode::kIdeal);

struct IdealExpr {
  enum class Kind {
    kEmpty,
    kFull,
    kFiniteLevel,
    kStrip,
    kStripPlus,
    kCorner,
    kOfBFOpen,
    kOfBFClosed,
    kUnion,
    kIntersection,
  };

  Kind kind = Kind::kEmpty;
  SetMode mode = SetMode::kIdeal;
  // Strip and StripPlus use (a, b); Corner uses (a, t) stored in (a, b).
  Point a;
  Point b;
  std::optional<MatrixUnitSet> finite;
  std::optional<PiecewiseBF> phi;
  std::vector<IdealExpr> parts;

  static IdealExpr Empty(SetMode mode = SetMode::kIdeal);
  static IdealExpr Full(SetMode mode = SetMode::kIdeal);
  static IdealExpr FiniteLevel(MatrixUnitSet set);
  static IdealExpr Strip(Point a, Point b, SetMode mode = SetMode::kIdeal);
  // Requires (a, b) in P (in G for module sets).
  static IdealExpr StripPlus(Point a, Point b, SetMode mode = SetMode::kIdeal);
  // Requires p_min < a <= t < p_max.
  static IdealExpr Corner(const RefinementSystem& sys, Point a, Point t,
                          SetMode mode = SetMode::kIdeal);
  static IdealExpr OfBFOpen(PiecewiseBF phi);
  static IdealExpr OfBFClosed(PiecewiseBF phi);

  const Point& t() const { return b; }
};

const char* IdealKindName(IdealExpr::Kind kind);

struct Verdict {
  enum class Kind { kYes, kNo, kUnknown };

  Kind kind = Kind::kNo;
  // For Yes: the cylinder level that certified membership, when one was used.
  std::optional<std::size_t> level;
  std::string reason;
  // For Unknown: the depth that was reached.
  std::size_t depth = 0;

  static Verdict Yes(std::optional<std::size_t> level = std::nullopt) {
    return {Kind::kYes, level, "", 0};
  }
  static Verdict No(std::string reason) {
    return {Kind::kNo, std::nullopt, std::move(reason), 0};
  }
  static Verdict Unknown(std::size_t depth) {
    return {Kind::kUnknown, std::nullopt, "depth cap reached", depth};
  }

  bool yes() const { return kind == Kind::kYes; }
  bool no() const { return kind == Kind::kNo; }
  bool unknown() const { return kind == Kind::kUnknown; }
};

const char* VerdictName(Verdict::Kind kind);

inline constexpr std::size_t kDefaultDepthCap = 4096;

// (x, y) in sigma.
Verdict Member(const RefinementSystem& sys, const IdealExpr& sigma,
               const Point& x, const Point& y,
               std::size_t depth_cap = kDefaultDepthCap);

// (x, y) in sigma[phi]: some linked cylinder pair around (x, y) lies below
// the graph of phi.
Verdict SigmaClosedMember(const RefinementSystem& sys, const PiecewiseBF& phi,
                          const Point& x, const Point& y,
                          std::size_t depth_cap = kDefaultDepthCap);

// Searches linked cylinder pairs (prefix_M x, prefix_M y) for one passing
// `test` against phi.  The predicate is monotone and eventually periodic in
// M, so the search ends with a definite answer past the joint horizon of the
// inputs; Unknown only when that horizon exceeds depth_cap.  Pairs outside P
// (outside G for module sets) are rejected first.
Verdict LinkedCylinderSearch(const RefinementSystem& sys, const PiecewiseBF& phi,
                             const Point& x, const Point& y, CylinderTest test,
                             std::size_t depth_cap = kDefaultDepthCap);

struct Violation {
  std::string kind;
  std::string detail;
};

struct SampleOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 500;
  std::size_t depth_cap = kDefaultDepthCap;
};

// Constructor invariants plus a sampled ideal-property check over triples
// (w, x) in P, (x, y) in sigma, (y, z) in P.
std::vector<Violation> ValidateIdealExpr(const RefinementSystem& sys,
                                         const IdealExpr& sigma,
                                         const SampleOptions& options = {});

enum class CombineOp { kUnion, kIntersection };

IdealExpr Combine(CombineOp op, std::vector<IdealExpr> parts);

// {(u, v) at level N : the whole linked cylinder pair lies in sigma}.
MatrixUnitSet RestrictToLevel(const RefinementSystem& sys,
                              const IdealExpr& sigma, std::size_t level);

// Every point mentioned by the expression: interval endpoints, constants and
// the points spelled by finite-level words.
std::vector<Point> AnchorPoints(const RefinementSystem& sys,
                                const IdealExpr& sigma);

}  // namespace boundfn

#endif  // BOUNDFN_IDEAL_HPP_
