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

#include "boundfn/irreducible.hpp"
#include "test_util.hpp"

namespace boundfn {
namespace {

using testing::Pt;

const RefinementSystem kBin = RefinementSystem::Binary();
const Point kPMin = PMin(kBin);

PiecewiseBF Family(FamilyKind kind, const Point& a, const Point& b) {
  return ConstructBFFamily(kBin, kind, a, b);
}

TEST(NormalizeBF, RecognizesFamilies) {
  const Point a = Pt("", "12");
  const Point b = Pt("22", "12");
  NormalizedBF n = NormalizeBF(kBin, Family(FamilyKind::kPhiAB, a, b));
  EXPECT_EQ(n.tag, FormTag::kPhiAB);
  EXPECT_EQ(n.a, a);
  EXPECT_EQ(n.b, b);

  n = NormalizeBF(kBin, Family(FamilyKind::kPhiAT, a, a));
  EXPECT_EQ(n.tag, FormTag::kPhiAT);
  EXPECT_EQ(n.a, a);
  EXPECT_EQ(n.b, a);

  const Point ga = Pt("2", "1");
  const Point gb = Pt("22", "1");
  n = NormalizeBF(kBin, BoundaryOf(kBin, IdealExpr::StripPlus(ga, gb)));
  EXPECT_EQ(n.tag, FormTag::kPsiPaab);
  EXPECT_EQ(n.a, ga);
  EXPECT_EQ(n.b, gb);

  EXPECT_EQ(NormalizeBF(kBin, PiecewiseBF::Identity(kBin)).tag,
            FormTag::kIdentityForm);
  EXPECT_EQ(NormalizeBF(kBin, PiecewiseBF::Constant(kBin, kPMin)).tag,
            FormTag::kMinimalForm);
  EXPECT_EQ(NormalizeBF(kBin, BFMinus(kBin, PiecewiseBF::Identity(kBin))).tag,
            FormTag::kOther);
}

TEST(NormalizeBF, PhiABFromPMin) {
  const Point b = Pt("2", "12");
  EXPECT_EQ(NormalizeBF(kBin, Family(FamilyKind::kPhiAB, kPMin, b)).tag,
            FormTag::kPhiAB);
}

TEST(RangeAndDrop, Examples) {
  const Point a = Pt("", "12");
  const Point t = Pt("2", "12");
  RangeAndDropResult r = RangeAndDrop(kBin, Family(FamilyKind::kPhiAT, a, t));
  EXPECT_EQ(r.range.Size(kBin), Cardinality::kTwo);
  EXPECT_EQ(r.range.FinitePoints(kBin), (std::vector<Point>{kPMin, a}));

  r = RangeAndDrop(kBin, PiecewiseBF::Identity(kBin));
  EXPECT_TRUE(r.drop_range.empty());
  EXPECT_TRUE(r.drop_set.empty());
  EXPECT_EQ(r.range.Size(kBin), Cardinality::kMore);

  const Point b = Pt("22", "12");
  r = RangeAndDrop(kBin, Family(FamilyKind::kPhiAB, a, b));
  EXPECT_EQ(r.drop_range.FinitePoints(kBin), (std::vector<Point>{a}));
  EXPECT_TRUE(r.range.Contains(kBin, kPMin));
  EXPECT_TRUE(r.range.Contains(kBin, a));
  EXPECT_TRUE(r.range.Contains(kBin, Pt("11", "2")));
  EXPECT_FALSE(r.range.Contains(kBin, Pt("2", "1")));
  EXPECT_TRUE(r.range.Contains(kBin, Pt("222", "12")));
  EXPECT_TRUE(r.drop_set.Contains(kBin, b));
  EXPECT_FALSE(r.drop_set.Contains(kBin, a));
}

TEST(RangeAndDrop, IdentityMinus) {
  RangeAndDropResult r = RangeAndDrop(kBin, BFMinus(kBin, PiecewiseBF::Identity(kBin)));
  EXPECT_FALSE(r.range.Contains(kBin, Pt("2", "1")));
  EXPECT_TRUE(r.range.Contains(kBin, Pt("1", "2")));
  EXPECT_TRUE(r.drop_set.Contains(kBin, Pt("2", "1")));
  EXPECT_FALSE(r.drop_set.Contains(kBin, Pt("1", "2")));
  EXPECT_TRUE(r.drop_range.Contains(kBin, Pt("1", "2")));
  EXPECT_EQ(r.drop_range.Size(kBin), Cardinality::kMore);
}

TEST(ClassifyMeetBF, IrreducibleFamilies) {
  const Point a = Pt("", "12");
  const Point b = Pt("22", "12");
  BFClass c = ClassifyMeetBF(kBin, Family(FamilyKind::kPhiAB, a, b));
  EXPECT_TRUE(c.irreducible);
  EXPECT_EQ(c.form, FormTag::kPhiAB);

  c = ClassifyMeetBF(kBin, BoundaryOf(kBin, IdealExpr::StripPlus(Pt("2", "1"),
                                                                 Pt("22", "1"))));
  EXPECT_TRUE(c.irreducible);
  EXPECT_EQ(c.form, FormTag::kPsiPaab);

  c = ClassifyMeetBF(kBin, PiecewiseBF::Identity(kBin));
  EXPECT_TRUE(c.irreducible);
  EXPECT_EQ(c.form, FormTag::kIdentityForm);
}

TEST(ClassifyMeetBF, TwoSeparatedDropsAreReducible) {
  PiecewiseBF phi = BFLattice(
      LatticeOp::kMeet, kBin,
      Family(FamilyKind::kPhiAB, Pt("1", "12"), Pt("12", "12")),
      Family(FamilyKind::kPhiAB, Pt("2", "12"), Pt("22", "12")));
  BFClass c = ClassifyMeetBF(kBin, phi);
  EXPECT_FALSE(c.irreducible);
  ASSERT_TRUE(c.psi1 && c.psi2);
  EXPECT_EQ(BFLattice(LatticeOp::kMeet, kBin, *c.psi1, *c.psi2), phi);
  EXPECT_FALSE(CheckWitnesses(kBin, phi, LatticeOp::kMeet, *c.psi1, *c.psi2));
}

TEST(ClassifyMeetBF, IdentityMinusIsReducible) {
  PiecewiseBF phi = BFMinus(kBin, PiecewiseBF::Identity(kBin));
  BFClass c = ClassifyMeetBF(kBin, phi);
  EXPECT_FALSE(c.irreducible);
  ASSERT_TRUE(c.psi1 && c.psi2);
  EXPECT_FALSE(CheckWitnesses(kBin, phi, LatticeOp::kMeet, *c.psi1, *c.psi2));
}

TEST(ClassifyJoinBF, Examples) {
  BFClass c = ClassifyJoinBF(kBin, PiecewiseBF::Constant(kBin, kPMin));
  EXPECT_TRUE(c.irreducible);
  EXPECT_EQ(c.form, FormTag::kMinimalForm);

  const Point a = Pt("", "12");
  c = ClassifyJoinBF(kBin, Family(FamilyKind::kPhiAT, a, a));
  EXPECT_TRUE(c.irreducible);
  EXPECT_EQ(c.form, FormTag::kPhiAT);

  const PiecewiseBF phi = Family(FamilyKind::kPhiAB, a, Pt("22", "12"));
  c = ClassifyJoinBF(kBin, phi);
  EXPECT_FALSE(c.irreducible);
  ASSERT_TRUE(c.psi1 && c.psi2);
  EXPECT_EQ(BFLattice(LatticeOp::kJoin, kBin, *c.psi1, *c.psi2), phi);

  c = ClassifyJoinBF(kBin, PiecewiseBF::Identity(kBin));
  EXPECT_FALSE(c.irreducible);
}

TEST(ClassifyJoinBF, ThreeValuedRange) {
  const Point a1 = Pt("1", "12");
  const Point a2 = Pt("12", "2");
  PiecewiseBF phi = BFLattice(LatticeOp::kJoin, kBin,
                              Family(FamilyKind::kPhiAT, a1, Pt("", "12")),
                              Family(FamilyKind::kPhiAT, a2, Pt("2", "12")));
  EXPECT_EQ(RangeAndDrop(kBin, phi).range.FinitePoints(kBin),
            (std::vector<Point>{kPMin, a1, a2}));
  BFClass c = ClassifyJoinBF(kBin, phi);
  EXPECT_FALSE(c.irreducible);
  ASSERT_TRUE(c.psi1 && c.psi2);
  EXPECT_EQ(BFLattice(LatticeOp::kJoin, kBin, *c.psi1, *c.psi2), phi);
}

TEST(ClassifyMeetIdeal, Catalog) {
  const Point a = Pt("", "12");
  const Point b = Pt("21", "12");
  ASSERT_TRUE(PTest(a, b));
  IdealClassification c = ClassifyMeetIdeal(kBin, IdealExpr::Strip(a, b));
  EXPECT_EQ(c.verdict, IdealClass::kIrreducible);
  EXPECT_TRUE(c.boundary_irreducible);

  const Point ga = Pt("1", "2");  // gap above
  const Point gb = Pt("22", "1");  // gap below
  IdealExpr strip = IdealExpr::Strip(ga, gb);
  c = ClassifyMeetIdeal(kBin, strip);
  EXPECT_EQ(c.verdict, IdealClass::kReducible);
  EXPECT_TRUE(c.boundary_irreducible);
  EXPECT_EQ(*c.boundary, Family(FamilyKind::kPhiAB, ga, gb));
  ASSERT_EQ(c.decomposition.size(), 2u);
  SampleOptions opts;
  EXPECT_EQ(CheckDecomposition(kBin, strip, CombineOp::kIntersection,
                               c.decomposition, opts),
            std::optional<std::size_t>(0));

  EXPECT_EQ(ClassifyMeetIdeal(kBin, IdealExpr::Full()).verdict,
            IdealClass::kNotInCatalog);
}

TEST(ClassifyMeetIdeal, StripPlusNeedsPairInP) {
  // A gap-above point and a gap-below point never share a tail, so the
  // reducible strip-plus case cannot be constructed.
  EXPECT_THROW(IdealExpr::StripPlus(Pt("1", "2"), Pt("22", "1")), Error);
  IdealClassification c =
      ClassifyMeetIdeal(kBin, IdealExpr::StripPlus(Pt("2", "1"), Pt("22", "1")));
  EXPECT_EQ(c.verdict, IdealClass::kIrreducible);
  EXPECT_TRUE(c.boundary_irreducible);
}

TEST(ClassifyJoinIdeal, Catalog) {
  EXPECT_EQ(ClassifyJoinIdeal(kBin, IdealExpr::Empty()).verdict,
            IdealClass::kIrreducible);
  const Point g = Pt("", "12");
  IdealClassification c = ClassifyJoinIdeal(kBin, IdealExpr::Corner(kBin, g, g));
  EXPECT_EQ(c.verdict, IdealClass::kIrreducible);
  EXPECT_TRUE(c.boundary_irreducible);

  const Point a = Pt("2", "1");
  const Point t = Pt("21", "2");
  IdealExpr corner = IdealExpr::Corner(kBin, a, t);
  c = ClassifyJoinIdeal(kBin, corner);
  EXPECT_EQ(c.verdict, IdealClass::kReducible);
  ASSERT_EQ(c.decomposition.size(), 2u);
  EXPECT_EQ(c.decomposition[0].t(), Pt("22", "1"));
  EXPECT_EQ(c.decomposition[1].a, Pt("1", "2"));
  SampleOptions opts;
  opts.samples = 500;
  EXPECT_EQ(CheckDecomposition(kBin, corner, CombineOp::kUnion, c.decomposition,
                               opts),
            std::optional<std::size_t>(0));
  EXPECT_EQ(*c.boundary, Family(FamilyKind::kPhiAT, Pt("1", "2"), t));

  c = ClassifyJoinIdeal(kBin, IdealExpr::Corner(kBin, a, Pt("21", "12")));
  EXPECT_EQ(c.verdict, IdealClass::kIrreducible);
}

TEST(ConstructFamily, Constraints) {
  const Point g = Pt("", "12");
  EXPECT_NO_THROW(Family(FamilyKind::kPhiAT, g, g));
  try {
    Family(FamilyKind::kPhiAB, Pt("2", "1"), Pt("22", "1"));
    FAIL() << "expected a constraint error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("Property2b"), std::string::npos);
  }
  EXPECT_THROW(Family(FamilyKind::kPsiPaab, Pt("2", "1"), Pt("22", "12")), Error);
  EXPECT_THROW(ConstructIdealFamily(kBin, FamilyKind::kPhiAT, g, g), Error);
  EXPECT_EQ(ParseFamilyKind("psi_paab"), FamilyKind::kPsiPaab);
  EXPECT_FALSE(ParseFamilyKind("sigma"));
}

}  // namespace
}  // namespace boundfn
