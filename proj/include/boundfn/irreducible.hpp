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

#ifndef BOUNDFN_IRREDUCIBLE_HPP_
#define BOUNDFN_IRREDUCIBLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boundfn/boundary.hpp"
#include "boundfn/ideal.hpp"
#include "boundfn/piecewise.hpp"

namespace boundfn {

// Named families of boundary functions recognized by NormalizeBF.
enum class FormTag {
  kIdentityForm,
  kMinimalForm,
  kPhiAB,    // y below a, a on [a, b], y above b
  kPsiPaab,  // y below a, pred a on [a, b), a at b, y above b
  kPhiAT,    // p_min on [p_min, t], a above t
  kOther,
};

const char* FormTagName(FormTag tag);

struct NormalizedBF {
  PiecewiseBF phi;
  FormTag tag = FormTag::kOther;
  // Family parameters: (a, b) for PhiAB and PsiPaab, (a, t) for PhiAT.
  std::optional<Point> a;
  std::optional<Point> b;
};

NormalizedBF NormalizeBF(const RefinementSystem& sys, const PiecewiseBF& phi);

// A subset of an order interval.  kAll is the interval itself, kNoGapBelow
// drops its points with a gap below, kGapBelowOnly keeps just those, and
// kPredOfGapBelow is {pred y : y in span has a gap below}.
struct PointSetPart {
  enum class Filter { kAll, kNoGapBelow, kGapBelowOnly, kPredOfGapBelow };

  OrderInterval span;
  Filter filter = Filter::kAll;
};

enum class Cardinality { kOne, kTwo, kMore };

const char* CardinalityName(Cardinality c);

// A finite union of PointSetParts, sorted by lower endpoint.
struct PointSetDescriptor {
  std::vector<PointSetPart> parts;

  bool empty() const { return parts.empty(); }
  // Cardinality 0 is reported as kOne; callers check empty() first.
  Cardinality Size(const RefinementSystem& sys) const;
  // The points of the set when it is finite.
  std::optional<std::vector<Point>> FinitePoints(const RefinementSystem& sys) const;
  // A few points of the set: every point of a finite part and two points of
  // each infinite part.
  std::vector<Point> Representatives(const RefinementSystem& sys) const;
  bool Contains(const RefinementSystem& sys, const Point& p) const;
};

struct RangeAndDropResult {
  PointSetDescriptor range;       // ran phi
  PointSetDescriptor drop_set;    // ED = {y : phi(y) < y}
  PointSetDescriptor drop_range;  // RD = {phi(y) : y in ED}
};

RangeAndDropResult RangeAndDrop(const RefinementSystem& sys,
                                const PiecewiseBF& phi);

// sup{y : phi(y) <= c}.  phi must be monotone.
Point SupAtMost(const RefinementSystem& sys, const PiecewiseBF& phi,
                const Point& c);

// Irreducible verdicts carry the family; reducible verdicts carry two
// strictly larger (meet) or smaller (join) boundary functions with
// phi = psi1 meet/join psi2.
struct BFClass {
  bool irreducible = false;
  FormTag form = FormTag::kOther;
  std::optional<Point> a;
  std::optional<Point> b;
  std::optional<PiecewiseBF> psi1;
  std::optional<PiecewiseBF> psi2;
};

// Both throw kInternal if a witness fails its exact verification.
BFClass ClassifyMeetBF(const RefinementSystem& sys, const PiecewiseBF& phi);
BFClass ClassifyJoinBF(const RefinementSystem& sys, const PiecewiseBF& phi);

// Exact checks of a reducible verdict: both witnesses valid, distinct from
// phi, and combining to phi.  Returns a description of the first failure.
std::optional<std::string> CheckWitnesses(const RefinementSystem& sys,
                                          const PiecewiseBF& phi,
                                          LatticeOp op, const PiecewiseBF& psi1,
                                          const PiecewiseBF& psi2);

enum class IdealClass { kIrreducible, kReducible, kNotInCatalog };

const char* IdealClassName(IdealClass c);

struct IdealClassification {
  IdealClass verdict = IdealClass::kNotInCatalog;
  std::optional<PiecewiseBF> boundary;
  // Whether the boundary function is irreducible for the same operation.
  bool boundary_irreducible = false;
  // For reducible sets: sigma = parts[0] op parts[1], both different from
  // sigma.
  std::vector<IdealExpr> decomposition;
};

// Strip and StripPlus sets.
IdealClassification ClassifyMeetIdeal(const RefinementSystem& sys,
                                      const IdealExpr& sigma);
// Empty and Corner sets.
IdealClassification ClassifyJoinIdeal(const RefinementSystem& sys,
                                      const IdealExpr& sigma);

// Compares sigma with the union (join) or intersection (meet) of the
// decomposition on sampled pairs of P and checks that each part differs from
// sigma somewhere.  Returns the number of disagreeing samples, or nullopt
// when a part could not be told apart from sigma.
std::optional<std::size_t> CheckDecomposition(const RefinementSystem& sys,
                                              const IdealExpr& sigma,
                                              CombineOp op,
                                              const std::vector<IdealExpr>& parts,
                                              const SampleOptions& options);

enum class FamilyKind { kStrip, kStripPlus, kCorner, kPhiAB, kPsiPaab, kPhiAT };

std::optional<FamilyKind> ParseFamilyKind(const std::string& name);
const char* FamilyKindName(FamilyKind kind);

// Ideal families: Strip(a, b), StripPlus(a, b), Corner(a, t).
IdealExpr ConstructIdealFamily(const RefinementSystem& sys, FamilyKind kind,
                               const Point& a, const Point& b);
// Boundary-function families: PhiAB(a, b), PsiPaab(a, b) with pa = pred a,
// PhiAT(a, t).  Throws kConstraint naming the violated condition.
PiecewiseBF ConstructBFFamily(const RefinementSystem& sys, FamilyKind kind,
                              const Point& a, const Point& b);

}  // namespace boundfn

#endif  // BOUNDFN_IRREDUCIBLE_HPP_
