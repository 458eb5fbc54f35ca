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

#include "boundfn/boundary.hpp"
#include "test_util.hpp"

namespace boundfn {
namespace {

using testing::Pt;
using testing::W;

const RefinementSystem kBin = RefinementSystem::Binary();
const Point kPMin = PMin(kBin);
const Point kPMax = PMax(kBin);

OrderInterval Iv(const Point& lo, bool lc, const Point& hi, bool hc) {
  return OrderInterval::Make(kBin, lo, lc, hi, hc);
}

// id below a, const(value) on [a, b], id above b.
PiecewiseBF Bump(const Point& a, const Point& b, const Point& value) {
  return PiecewiseBF::Make(kBin, {{Iv(kPMin, true, a, false), Leaf::Identity()},
                                  {Iv(a, true, b, true), Leaf::Const(value)},
                                  {Iv(b, false, kPMax, true), Leaf::Identity()}});
}

std::set<WordPair> Pairs(std::initializer_list<std::pair<const char*, const char*>> ps) {
  std::set<WordPair> out;
  for (auto [u, v] : ps) out.insert({W(u), W(v)});
  return out;
}

TEST(BoundaryOf, EmptyAndFull) {
  EXPECT_EQ(BoundaryOf(kBin, IdealExpr::Empty()),
            PiecewiseBF::Constant(kBin, kPMin));
  EXPECT_EQ(BoundaryOf(kBin, IdealExpr::Full()), PiecewiseBF::Identity(kBin));
}

TEST(BoundaryOf, FiniteLevel) {
  IdealExpr fin =
      IdealExpr::FiniteLevel(CloseFiniteLevel(kBin, 1, Pairs({{"1", "2"}})));
  const Point top_of_1 = Pt("1", "2");
  PiecewiseBF expected = PiecewiseBF::Make(
      kBin, {{Iv(kPMin, true, top_of_1, true), Leaf::Const(kPMin)},
             {Iv(top_of_1, false, kPMax, true), Leaf::Const(top_of_1)}});
  EXPECT_EQ(BoundaryOf(kBin, fin), expected);
}

TEST(BoundaryOf, StripWithGapBelow) {
  const Point a = Pt("2", "1");
  const Point b = Pt("22", "1");
  const Point pa = Pt("1", "2");
  EXPECT_EQ(BoundaryOf(kBin, IdealExpr::Strip(a, b)), Bump(a, b, pa));
  // The strip-plus variant takes the value a at b.
  PiecewiseBF plus = BoundaryOf(kBin, IdealExpr::StripPlus(a, b));
  EXPECT_EQ(EvalBF(kBin, plus, b), a);
  EXPECT_EQ(EvalBF(kBin, plus, a), pa);
}

TEST(BoundaryOf, StripAndStripPlusAgreeWithoutGapBelow) {
  const Point a = Pt("", "12");
  const Point b = Pt("22", "12");
  EXPECT_EQ(BoundaryOf(kBin, IdealExpr::Strip(a, b)),
            BoundaryOf(kBin, IdealExpr::StripPlus(a, b)));
  EXPECT_EQ(BoundaryOf(kBin, IdealExpr::Strip(a, b)), Bump(a, b, a));
}

TEST(BoundaryOf, Corner) {
  const Point a = Pt("2", "1");
  const Point t = Pt("21", "2");
  PiecewiseBF expected = PiecewiseBF::Make(
      kBin, {{Iv(kPMin, true, t, true), Leaf::Const(kPMin)},
             {Iv(t, false, kPMax, true), Leaf::Const(Pt("1", "2"))}});
  EXPECT_EQ(BoundaryOf(kBin, IdealExpr::Corner(kBin, a, t)), expected);
}

TEST(BoundaryOf, ModuleSets) {
  const Point a = Pt("", "12");
  const Point b = Pt("22", "12");
  EXPECT_EQ(BoundaryOf(kBin, IdealExpr::Full(SetMode::kModule)),
            PiecewiseBF::Constant(kBin, kPMax, SetMode::kModule));
  PiecewiseBF strip = BoundaryOf(kBin, IdealExpr::Strip(a, b, SetMode::kModule));
  EXPECT_EQ(EvalBF(kBin, strip, kPMin), a);
  EXPECT_EQ(EvalBF(kBin, strip, b), a);
  EXPECT_EQ(EvalBF(kBin, strip, Pt("", "2")), kPMax);
}

TEST(ValidateBF, Examples) {
  const Point a = Pt("", "12");
  const Point b = Pt("22", "12");
  EXPECT_TRUE(ValidateBF(kBin, Bump(a, b, a)).empty());
  EXPECT_TRUE(ValidateBF(kBin, PiecewiseBF::Constant(kBin, kPMin)).empty());
  const Point ga = Pt("2", "1");
  auto v = ValidateBF(kBin, Bump(ga, Pt("22", "1"), ga));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, "Property2bViolation");
}

TEST(ValidateBF, EachPropertyCanFail) {
  const Point a = Pt("", "12");
  // Property 1: a constant above y near p_min.
  auto v = ValidateBF(kBin, PiecewiseBF::Constant(kBin, a));
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, "Property1Violation");
  // Property 3: id followed by a smaller constant.
  v = ValidateBF(kBin, PiecewiseBF::Make(
                           kBin, {{Iv(kPMin, true, a, true), Leaf::Identity()},
                                  {Iv(a, false, kPMax, true), Leaf::Const(kPMin)}}));
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, "Property3Violation");
  // Property 4: a jump up at a point without a gap below.
  v = ValidateBF(kBin, PiecewiseBF::Make(
                           kBin, {{Iv(kPMin, true, a, false), Leaf::Const(kPMin)},
                                  {Iv(a, true, kPMax, true), Leaf::Const(a)}}));
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, "Property4Violation");
  // A gap-below value held on a whole interval.
  const Point g = Pt("2", "1");
  v = ValidateBF(kBin, PiecewiseBF::Make(
                           kBin, {{Iv(kPMin, true, g, false), Leaf::Const(kPMin)},
                                  {Iv(g, true, kPMax, true), Leaf::Const(g)}}));
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, "Property2bViolation");
}

TEST(ValidateBF, NeighbourhoodCondition) {
  // phi = const(p_min) below [2|1], then const([12|1]) at [2|1]... the value
  // [2|1] at y = [2|1] would need a cylinder to its right below the graph.
  const Point y = Pt("2", "1");
  PiecewiseBF bad = PiecewiseBF::Make(
      kBin, {{Iv(kPMin, true, y, false), Leaf::Const(kPMin)},
             {Iv(y, true, y, true), Leaf::Identity()},
             {Iv(y, false, kPMax, true), Leaf::Const(Pt("1", "2"))}});
  auto v = ValidateBF(kBin, bad);
  ASSERT_FALSE(v.empty());
}

TEST(Modification, Examples) {
  const Point a = Pt("2", "1");
  const Point pa = Pt("1", "2");
  const Point b = Pt("22", "1");
  PiecewiseBF phi = Bump(a, b, pa);
  ModificationResult r = IsPointOfModification(kBin, phi, b);
  ASSERT_TRUE(r.verdict.yes());
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->u, W("21"));
  EXPECT_EQ(r.certificate->v, W("22"));
  EXPECT_TRUE(IsPointOfModification(kBin, phi, Pt("212", "1")).verdict.no());
  EXPECT_TRUE(IsPointOfModification(kBin, phi, Pt("", "12")).verdict.no());
}

TEST(BFPlus, Examples) {
  const Point a = Pt("2", "1");
  const Point pa = Pt("1", "2");
  const Point b = Pt("22", "1");
  PiecewiseBF phi = Bump(a, b, pa);
  PiecewiseBF plus = BFPlus(kBin, phi);
  EXPECT_EQ(plus, Overwrite(kBin, phi, Iv(b, true, b, true), Leaf::Const(a)));
  EXPECT_EQ(plus, BoundaryOf(kBin, IdealExpr::StripPlus(a, b)));
  EXPECT_TRUE(ValidateBF(kBin, plus).empty());
  PiecewiseBF minimal = PiecewiseBF::Constant(kBin, kPMin);
  EXPECT_EQ(BFPlus(kBin, minimal), minimal);
  EXPECT_EQ(BFMinus(kBin, plus), BFMinus(kBin, phi));
  EXPECT_EQ(BFPlus(kBin, BFMinus(kBin, phi)), plus);
}

TEST(BFPlus, IdentityMinusBecomesIdentity) {
  PiecewiseBF idm =
      PiecewiseBF::Make(kBin, {{OrderInterval::Whole(kBin), Leaf::IdentityMinus()}});
  EXPECT_EQ(BFPlus(kBin, idm), PiecewiseBF::Identity(kBin));
}

TEST(SigmaOpenClosed, Identity) {
  PiecewiseBF id = PiecewiseBF::Identity(kBin);
  const Point x = Pt("1", "12");
  const Point y = Pt("2", "12");
  EXPECT_TRUE(Member(kBin, SigmaOpen(id), x, y).yes());
  EXPECT_TRUE(Member(kBin, SigmaOpen(id), x, x).no());
  EXPECT_TRUE(Member(kBin, SigmaClosed(id), x, x).yes());
}

TEST(SigmaOpenClosed, StripBoundaryAtCorner) {
  const Point a = Pt("", "12");
  const Point b = Pt("22", "12");
  PiecewiseBF psi = Bump(a, b, a);
  EXPECT_TRUE(Member(kBin, SigmaOpen(psi), a, b).no());
  EXPECT_TRUE(Member(kBin, SigmaClosed(psi), a, b).yes());
  EXPECT_EQ(BoundaryOf(kBin, SigmaClosed(psi)), psi);
  EXPECT_EQ(BoundaryOf(kBin, SigmaOpen(psi)), BFMinus(kBin, psi));
}

TEST(LPhi, Examples) {
  const Point a = Pt("2", "1");
  const Point b = Pt("22", "1");
  PiecewiseBF psi = BoundaryOf(kBin, IdealExpr::StripPlus(a, b));
  EXPECT_TRUE(InLPhi(kBin, psi, b).yes());
  EXPECT_TRUE(InLPhi(kBin, PiecewiseBF::Identity(kBin), Pt("", "12")).no());
  EXPECT_TRUE(InLPhi(kBin, PiecewiseBF::Constant(kBin, kPMin), a).no());
}

TEST(Sandwich, Examples) {
  const Point a = Pt("", "12");
  const Point b = Pt("22", "12");
  PiecewiseBF psi = Bump(a, b, a);
  EXPECT_TRUE(SandwichCheck(kBin, IdealExpr::StripPlus(a, b), psi).yes());
  EXPECT_TRUE(SandwichCheck(kBin, IdealExpr::Strip(a, b), psi).yes());
  EXPECT_TRUE(SandwichCheck(kBin, SigmaClosed(psi), psi).yes());
  const Point ga = Pt("2", "1");
  const Point gb = Pt("22", "1");
  PiecewiseBF plus = BoundaryOf(kBin, IdealExpr::StripPlus(ga, gb));
  EXPECT_TRUE(InLPhi(kBin, plus, gb).yes());
  EXPECT_TRUE(SandwichCheck(kBin, SigmaOpen(plus), plus).no());
}

TEST(Equivalence, Examples) {
  const Point a = Pt("2", "1");
  const Point b = Pt("22", "1");
  PiecewiseBF phi = Bump(a, b, Pt("1", "2"));
  EXPECT_TRUE(BFEquiv(kBin, phi, BFPlus(kBin, phi)));
  EXPECT_TRUE(BFBetween(kBin, phi, BFPlus(kBin, phi)));
  PiecewiseBF idm =
      PiecewiseBF::Make(kBin, {{OrderInterval::Whole(kBin), Leaf::IdentityMinus()}});
  EXPECT_TRUE(BFEquiv(kBin, PiecewiseBF::Identity(kBin), idm));
  EXPECT_TRUE(BFBetween(kBin, PiecewiseBF::Identity(kBin), idm));
  EXPECT_FALSE(BFEquiv(kBin, PiecewiseBF::Identity(kBin),
                       PiecewiseBF::Constant(kBin, kPMin)));
  EXPECT_FALSE(BFBetween(kBin, PiecewiseBF::Identity(kBin),
                         PiecewiseBF::Constant(kBin, kPMin)));
}

}  // namespace
}  // namespace boundfn
