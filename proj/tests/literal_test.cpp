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
#include "boundfn/literal.hpp"
#include "boundfn/sample.hpp"
#include "test_util.hpp"

namespace boundfn {
namespace {

using testing::Pt;
using testing::W;

const RefinementSystem kBin = RefinementSystem::Binary();

TEST(Literal, Systems) {
  EXPECT_EQ(ParseSystem(";2"), kBin);
  RefinementSystem mixed = ParseSystem("2.3;2.3");
  EXPECT_EQ(mixed.prefix(), (DigitList{2, 3}));
  EXPECT_EQ(mixed.cycle(), (DigitList{2, 3}));
  EXPECT_EQ(FormatSystem(mixed), "2.3;2.3");
  EXPECT_EQ(FormatSystem(kBin), ";2");
  EXPECT_THROW(ParseSystem("2.3"), Error);
  EXPECT_THROW(ParseSystem(";"), Error);
}

TEST(Literal, Points) {
  EXPECT_EQ(ParsePoint(kBin, "1.2|2"), Pt("12", "2"));
  EXPECT_EQ(ParsePoint(kBin, "12|2"), Pt("12", "2"));
  EXPECT_EQ(ParsePoint(kBin, "|1"), PMin(kBin));
  EXPECT_EQ(ParsePoint(kBin, "pmax"), PMax(kBin));
  EXPECT_EQ(ParsePoint(kBin, " 2|1 "), Pt("2", "1"));
  EXPECT_THROW(ParsePoint(kBin, "12"), Error);
  EXPECT_THROW(ParsePoint(kBin, "1|"), Error);
  EXPECT_THROW(ParsePoint(kBin, "3|1"), Error);
  EXPECT_THROW(ParsePoint(kBin, "a"), Error);
  Bindings b;
  b.points.emplace("a", Pt("2", "1"));
  EXPECT_EQ(ParsePoint(kBin, "a", &b), Pt("2", "1"));
}

TEST(Literal, ErrorsCarryColumns) {
  try {
    ParseIdealExpr(kBin, "strip(a=2|1, c=1|2)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("column 14"), std::string::npos) << e.what();
  }
  try {
    ParseIdealExpr(kBin, "union(empty, sigma)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnresolvedName);
  }
}

TEST(Literal, WideDigitsRoundTrip) {
  RefinementSystem big({}, {12});
  for (const Point& x : {CanonicalizePoint(big, {11}, {12}),
                         CanonicalizePoint(big, {}, {10}),
                         CanonicalizePoint(big, {3, 11}, {1, 12}),
                         CanonicalizePoint(big, {3}, {1})}) {
    EXPECT_EQ(ParsePoint(big, FormatPoint(x)), x) << FormatPoint(x);
  }
  Word w{{11}};
  EXPECT_EQ(ParseWord(big, FormatWord(w)), w);
  EXPECT_EQ(ParseWord(big, FormatWord(Word{{1, 2}})), (Word{{1, 2}}));
}

TEST(Literal, IdealExpressions) {
  IdealExpr s = ParseIdealExpr(kBin, "strip(a=1.2|2, b=2.1|2)");
  EXPECT_EQ(s.kind, IdealExpr::Kind::kStrip);
  EXPECT_EQ(s.a, Pt("12", "2"));
  IdealExpr f = ParseIdealExpr(kBin, "finite(level=2, pairs=[(12,21)])");
  ASSERT_TRUE(f.finite);
  EXPECT_EQ(f.finite->pairs.size(), 4u);
  EXPECT_TRUE(f.finite->Contains(W("11"), W("22")));
  IdealExpr u = ParseIdealExpr(kBin, "union(empty, corner(a=2|1, t=21|2))");
  EXPECT_EQ(u.kind, IdealExpr::Kind::kUnion);
  EXPECT_EQ(u.parts.size(), 2u);
  IdealExpr m = ParseIdealExpr(kBin, "full(mode=module)");
  EXPECT_EQ(m.mode, SetMode::kModule);
}

TEST(Literal, BoundaryFunctions) {
  PiecewiseBF phi = ParseBF(kBin, "{[|1, 2|1) -> id; [2|1, 22|1] -> const(1|2); (22|1, |2] -> id}");
  EXPECT_EQ(EvalBF(kBin, phi, Pt("21", "2")), Pt("1", "2"));
  EXPECT_EQ(ParseBF(kBin, FormatBF(phi)), phi);
  PiecewiseBF idm = ParseBF(kBin, "module:{[|1, |2] -> id-}");
  EXPECT_EQ(idm.mode(), SetMode::kModule);
  EXPECT_THROW(ParseBF(kBin, "{[|1, 2|1) -> id}"), Error);
  EXPECT_THROW(ParseBF(kBin, "{[|1, |2] -> idd}"), Error);
}

// Every printed literal re-parses to an equal object.
TEST(Literal, RandomRoundTrip) {
  for (const RefinementSystem& sys :
       {kBin, RefinementSystem({}, {2, 3}), RefinementSystem({3}, {2, 11})}) {
    PointSampler sampler(sys, 5);
    for (int i = 0; i < 300; ++i) {
      const Point x = sampler.Random();
      EXPECT_EQ(ParsePoint(sys, FormatPoint(x)), x) << FormatPoint(x);
      const Point y = sampler.InOrbitAbove(x);
      if (x < y && y < PMax(sys) && PMin(sys) < x) {
        for (const IdealExpr& e :
             {IdealExpr::Strip(x, y), IdealExpr::StripPlus(x, y),
              IdealExpr::Corner(sys, x, y), IdealExpr::Strip(x, y, SetMode::kModule),
              Combine(CombineOp::kIntersection,
                      {IdealExpr::Strip(x, y), IdealExpr::OfBFClosed(BoundaryOf(
                                                   sys, IdealExpr::Corner(sys, x, y)))})}) {
          const std::string text = FormatIdealExpr(e);
          EXPECT_EQ(FormatIdealExpr(ParseIdealExpr(sys, text)), text);
        }
        PiecewiseBF phi = BoundaryOf(sys, IdealExpr::Strip(x, y));
        EXPECT_EQ(ParseBF(sys, FormatBF(phi)), phi) << FormatBF(phi);
      }
    }
  }
}

TEST(Literal, FiniteRoundTrip) {
  RefinementSystem sys({}, {2, 3});
  MatrixUnitSet s = CloseFiniteLevel(sys, 2, {{W("12"), W("21")}, {W("23"), W("23")}});
  IdealExpr e = IdealExpr::FiniteLevel(s);
  IdealExpr back = ParseIdealExpr(sys, FormatIdealExpr(e));
  ASSERT_TRUE(back.finite);
  EXPECT_EQ(*back.finite, s);
  EXPECT_EQ(FormatIdealExpr(IdealExpr::FiniteLevel(MatrixUnitSet{1, {}, SetMode::kIdeal})),
            "finite(level=1, pairs=[])");
}

}  // namespace
}  // namespace boundfn
