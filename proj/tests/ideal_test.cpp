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

#include "boundfn/ideal.hpp"
#include "boundfn/sample.hpp"
#include "test_util.hpp"

namespace boundfn {
namespace {

using testing::Pt;
using testing::W;

const RefinementSystem kBin = RefinementSystem::Binary();

std::set<WordPair> Pairs(std::initializer_list<std::pair<const char*, const char*>> ps) {
  std::set<WordPair> out;
  for (auto [u, v] : ps) out.insert({W(u), W(v)});
  return out;
}

TEST(CloseFiniteLevel, Examples) {
  EXPECT_EQ(CloseFiniteLevel(kBin, 2, Pairs({{"12", "21"}})).pairs,
            Pairs({{"11", "21"}, {"12", "21"}, {"11", "22"}, {"12", "22"}}));
  EXPECT_TRUE(CloseFiniteLevel(kBin, 2, {}).pairs.empty());
  EXPECT_EQ(CloseFiniteLevel(kBin, 2, Pairs({{"11", "11"}})).pairs,
            Pairs({{"11", "11"}, {"11", "12"}, {"11", "21"}, {"11", "22"}}));
}

TEST(CloseFiniteLevel, Errors) {
  EXPECT_THROW(CloseFiniteLevel(kBin, 2, Pairs({{"21", "12"}})), Error);
  EXPECT_THROW(CloseFiniteLevel(kBin, 2, Pairs({{"13", "21"}})), Error);
  EXPECT_THROW(CloseFiniteLevel(kBin, 2, Pairs({{"1", "21"}})), Error);
  // Module sets accept u > v.
  EXPECT_EQ(CloseFiniteLevel(kBin, 1, Pairs({{"2", "1"}}), SetMode::kModule)
                .pairs.size(),
            4u);
}

TEST(Member, Examples) {
  const Point a = Pt("", "12");
  const Point b = Pt("22", "12");
  IdealExpr strip = IdealExpr::Strip(a, b);
  EXPECT_TRUE(Member(kBin, strip, PMin(kBin), Pt("2", "1")).yes());

  IdealExpr fin = IdealExpr::FiniteLevel(CloseFiniteLevel(kBin, 1, Pairs({{"1", "2"}})));
  EXPECT_TRUE(Member(kBin, fin, Pt("11", "2"), Pt("2", "2")).yes());
  EXPECT_TRUE(Member(kBin, fin, Pt("2", "1"), Pt("2", "1")).no());

  const Point pa = Pt("1", "2");
  const Point sb = Pt("22", "1");
  IdealExpr plus = IdealExpr::StripPlus(Pt("2", "1"), sb);
  EXPECT_TRUE(Member(kBin, plus, Pt("2", "1"), sb).yes());
  EXPECT_TRUE(Member(kBin, IdealExpr::Strip(Pt("2", "1"), sb), Pt("2", "1"), sb).no());
  (void)pa;
}

TEST(Member, IdealModeImpliesP) {
  PointSampler s(kBin, 2);
  IdealExpr full = IdealExpr::Full();
  for (int i = 0; i < 200; ++i) {
    Point x = s.Random();
    Point y = s.InOrbit(x);
    EXPECT_EQ(Member(kBin, full, x, y).yes(), PTest(x, y));
    IdealExpr mfull = IdealExpr::Full(SetMode::kModule);
    EXPECT_EQ(Member(kBin, mfull, x, y).yes(), OrbitTest(x, y));
  }
}

TEST(Constructors, Invariants) {
  EXPECT_THROW(IdealExpr::StripPlus(Pt("2", "1"), Pt("1", "2")), Error);
  EXPECT_THROW(IdealExpr::Corner(kBin, PMin(kBin), Pt("2", "1")), Error);
  EXPECT_THROW(IdealExpr::Corner(kBin, Pt("2", "1"), Pt("1", "2")), Error);
  EXPECT_NO_THROW(IdealExpr::Corner(kBin, Pt("2", "1"), Pt("2", "1")));
}

TEST(Validate, StripHasNoViolations) {
  IdealExpr strip = IdealExpr::Strip(Pt("", "12"), Pt("22", "12"));
  EXPECT_TRUE(ValidateIdealExpr(kBin, strip).empty());
}

TEST(Validate, HandBuiltStripPlusOutsideP) {
  IdealExpr e = IdealExpr::Strip(Pt("2", "1"), Pt("1", "2"));
  e.kind = IdealExpr::Kind::kStripPlus;
  auto v = ValidateIdealExpr(kBin, e);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, "ConstructorViolation");
}

TEST(Validate, HandBuiltNonClosedFiniteLevel) {
  MatrixUnitSet raw;
  raw.level = 2;
  raw.pairs = Pairs({{"12", "21"}});
  IdealExpr e = IdealExpr::FiniteLevel(raw);
  auto v = ValidateIdealExpr(kBin, e);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, "IdealPropertyViolation");
}

TEST(Validate, AllConstructorsPass) {
  const Point a = Pt("2", "1");
  const Point t = Pt("21", "12");
  std::vector<IdealExpr> exprs = {
      IdealExpr::Empty(),
      IdealExpr::Full(),
      IdealExpr::Strip(a, t),
      IdealExpr::StripPlus(Pt("1", "2"), Pt("12", "2")),
      IdealExpr::Corner(kBin, a, t),
      IdealExpr::FiniteLevel(CloseFiniteLevel(kBin, 2, Pairs({{"12", "21"}}))),
  };
  for (const IdealExpr& e : exprs) {
    EXPECT_TRUE(ValidateIdealExpr(kBin, e).empty()) << IdealKindName(e.kind);
  }
}

TEST(Combine, UnionAndIntersection) {
  PointSampler s(kBin, 4);
  IdealExpr sigma = IdealExpr::Strip(Pt("", "12"), Pt("22", "12"));
  IdealExpr c1 = IdealExpr::Corner(kBin, Pt("2", "1"), Pt("21", "12"));
  IdealExpr c2 = IdealExpr::Corner(kBin, Pt("", "12"), Pt("", "21"));
  IdealExpr u0 = Combine(CombineOp::kUnion, {IdealExpr::Empty(), sigma});
  IdealExpr i0 = Combine(CombineOp::kIntersection, {IdealExpr::Full(), sigma});
  IdealExpr uc = Combine(CombineOp::kUnion, {c1, c2});
  IdealExpr ic = Combine(CombineOp::kIntersection, {sigma, c1});
  for (int i = 0; i < 200; ++i) {
    Point x = s.Random();
    Point y = s.InOrbitAbove(x);
    const bool in_sigma = Member(kBin, sigma, x, y).yes();
    EXPECT_EQ(Member(kBin, u0, x, y).yes(), in_sigma);
    EXPECT_EQ(Member(kBin, i0, x, y).yes(), in_sigma);
    const bool in1 = Member(kBin, c1, x, y).yes();
    const bool in2 = Member(kBin, c2, x, y).yes();
    EXPECT_EQ(Member(kBin, uc, x, y).yes(), in1 || in2);
    EXPECT_EQ(Member(kBin, ic, x, y).yes(), in_sigma && in1);
  }
  EXPECT_THROW(Combine(CombineOp::kUnion, {IdealExpr::Full(),
                                            IdealExpr::Full(SetMode::kModule)}),
               Error);
}

TEST(RestrictToLevel, Examples) {
  EXPECT_EQ(RestrictToLevel(kBin, IdealExpr::Full(), 1).pairs,
            Pairs({{"1", "1"}, {"1", "2"}, {"2", "2"}}));
  IdealExpr fin = IdealExpr::FiniteLevel(CloseFiniteLevel(kBin, 1, Pairs({{"1", "2"}})));
  EXPECT_EQ(RestrictToLevel(kBin, fin, 2).pairs,
            Pairs({{"11", "21"}, {"11", "22"}, {"12", "21"}, {"12", "22"}}));
  IdealExpr strip = IdealExpr::Strip(Pt("", "12"), Pt("22", "12"));
  EXPECT_TRUE(RestrictToLevel(kBin, strip, 1).pairs.empty());
}

// Parent pairs are present exactly when all their children are.
void ExpectParentChildConsistent(const IdealExpr& e, std::size_t max_level) {
  for (std::size_t n = 1; n < max_level; ++n) {
    MatrixUnitSet parent = RestrictToLevel(kBin, e, n);
    MatrixUnitSet child = RestrictToLevel(kBin, e, n + 1);
    for (const Word& u : AllWords(kBin, n)) {
      for (const Word& v : AllWords(kBin, n)) {
        bool all = true;
        for (Digit d = 1; d <= 2; ++d) {
          Word cu = u;
          Word cv = v;
          cu.digits.push_back(d);
          cv.digits.push_back(d);
          all = all && child.Contains(cu, cv);
        }
        EXPECT_EQ(parent.Contains(u, v), all)
            << IdealKindName(e.kind) << " level " << n << " (" << FormatWord(u)
            << "," << FormatWord(v) << ")";
      }
    }
  }
}

TEST(RestrictToLevel, ParentChildConsistency) {
  const Point a = Pt("2", "1");
  const Point t = Pt("21", "12");
  ExpectParentChildConsistent(IdealExpr::Strip(Pt("", "12"), Pt("22", "12")), 5);
  ExpectParentChildConsistent(IdealExpr::Strip(a, Pt("22", "1")), 5);
  ExpectParentChildConsistent(IdealExpr::StripPlus(Pt("1", "2"), Pt("12", "2")), 5);
  ExpectParentChildConsistent(IdealExpr::Corner(kBin, a, t), 5);
  ExpectParentChildConsistent(
      IdealExpr::FiniteLevel(CloseFiniteLevel(kBin, 3, Pairs({{"121", "212"}}))), 5);
  ExpectParentChildConsistent(
      Combine(CombineOp::kUnion, {IdealExpr::Corner(kBin, a, t),
                                  IdealExpr::Corner(kBin, Pt("", "12"), Pt("", "21"))}),
      4);
}

TEST(RestrictToLevel, MatchesMembershipOnSamples) {
  PointSampler s(kBin, 8);
  std::vector<IdealExpr> exprs = {
      IdealExpr::Strip(Pt("", "12"), Pt("22", "12")),
      IdealExpr::Corner(kBin, Pt("2", "1"), Pt("21", "12")),
  };
  for (const IdealExpr& e : exprs) {
    for (std::size_t n = 1; n <= 4; ++n) {
      MatrixUnitSet m = RestrictToLevel(kBin, e, n);
      for (const auto& [u, v] : m.pairs) {
        for (int i = 0; i < 20; ++i) {
          Point tail = s.Random();
          EXPECT_TRUE(
              Member(kBin, e, Splice(kBin, u, tail), Splice(kBin, v, tail)).yes());
        }
      }
    }
  }
}

}  // namespace
}  // namespace boundfn
