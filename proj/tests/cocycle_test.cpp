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

#include "boundfn/cocycle.hpp"
#include "test_util.hpp"

namespace boundfn {
namespace {

using testing::Pt;

const RefinementSystem kBin = RefinementSystem::Binary();

Rational Q(long p, long q) { return Rational(p) / q; }

TEST(BTilde, Examples) {
  EXPECT_EQ(BTilde(kBin, Pt("", "1")), 0);
  EXPECT_EQ(BTilde(kBin, Pt("", "2")), 1);
  EXPECT_EQ(BTilde(kBin, Pt("", "12")), Q(1, 3));
}

TEST(BTilde, MixedRadixAgreesWithPartialSums) {
  RefinementSystem sys({3}, {2, 4});
  Point x = CanonicalizePoint(sys, {2, 1}, {3, 2, 4, 1});
  // Partial sums up to 200 positions bracket the exact value.
  Rational sum = 0;
  Rational weight = 1;
  for (std::size_t n = 1; n <= 200; ++n) {
    weight /= sys.radix(n);
    sum += Rational(x.digit(n) - 1) * weight;
  }
  Rational exact = BTilde(sys, x);
  EXPECT_LE(sum, exact);
  EXPECT_LE(exact - sum, weight * 4);
}

TEST(CTilde, Examples) {
  EXPECT_EQ(CTilde(kBin, Pt("11", "2"), Pt("", "2")), Q(3, 4));
  EXPECT_EQ(CTilde(kBin, Pt("1", "12"), Pt("1", "12")), 0);
  EXPECT_EQ(CTilde(kBin, Pt("", "2"), Pt("11", "2")), Q(-3, 4));
  try {
    CTilde(kBin, Pt("", "12"), Pt("", "21"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotInOrbit);
  }
}

TEST(CTilde, AdditiveAndAnalytic) {
  const Point pts[] = {Pt("", "2"), Pt("11", "2"), Pt("21", "2"),
                       Pt("121", "2"), Pt("2", "2"), Pt("1", "2")};
  for (const Point& x : pts) {
    for (const Point& y : pts) {
      EXPECT_EQ(PTest(x, y), CTilde(kBin, x, y) >= 0);
      for (const Point& z : pts) {
        EXPECT_EQ(CTilde(kBin, x, z), CTilde(kBin, x, y) + CTilde(kBin, y, z));
      }
    }
  }
}

TEST(GapEnumeration, Examples) {
  GapEnumeration g(kBin);
  EXPECT_EQ(g.GapPoint(1), Pt("1", "2"));
  EXPECT_EQ(g.GapPoint(2), Pt("11", "2"));
  EXPECT_EQ(g.GapPoint(3), Pt("21", "2"));
  EXPECT_EQ(g.GapIndex(Pt("1", "2")), 1u);
  EXPECT_THROW(g.GapIndex(Pt("", "12")), Error);
  EXPECT_THROW(g.GapPoint(0), Error);
}

TEST(GapEnumeration, Bijective) {
  RefinementSystem sys({3}, {2});
  GapEnumeration g(sys);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    Point a = g.GapPoint(n);
    EXPECT_TRUE(HasGapAbove(sys, a));
    EXPECT_EQ(g.GapIndex(a), n);
  }
}

TEST(BApprox, Examples) {
  RationalInterval z = BApprox(kBin, PMin(kBin), Q(1, 8));
  EXPECT_EQ(z.lo, 0);
  EXPECT_EQ(z.hi, 0);
  RationalInterval top = BApprox(kBin, Pt("", "2"), Q(1, 8));
  EXPECT_EQ(top.lo, Q(15, 8));
  EXPECT_EQ(top.hi, 2);
}

TEST(BApprox, ContainsLongPartialSum) {
  // Reference value for [2|1]: btilde plus the first 40 gap terms; the
  // omitted terms add at most 2^-40.
  const Point x = Pt("2", "1");
  GapEnumeration g(kBin);
  Rational ref = BTilde(kBin, x);
  Rational w = 1;
  for (std::uint64_t n = 1; n <= 40; ++n) {
    w /= 2;
    if (g.GapPoint(n) < x) ref += w;
  }
  RationalInterval iv = BApprox(kBin, x, Q(1, 4));
  EXPECT_LE(iv.hi - iv.lo, Q(1, 4));
  EXPECT_LE(iv.lo, ref);
  EXPECT_GE(iv.hi, ref);
  EXPECT_GT(ref, 1);
}

TEST(OrderByCocycle, Examples) {
  EXPECT_EQ(BTilde(kBin, Pt("1", "2")), BTilde(kBin, Pt("2", "1")));
  EXPECT_EQ(OrderByCocycle(kBin, Pt("1", "2"), Pt("2", "1")), Ordering::kLess);
  EXPECT_EQ(OrderByCocycle(kBin, Pt("", "1"), Pt("", "2")), Ordering::kLess);
  EXPECT_EQ(OrderByCocycle(kBin, Pt("", "21"), Pt("", "12")),
            Ordering::kGreater);
  EXPECT_THROW(OrderByCocycle(kBin, Pt("", "12"), Pt("", "12")), Error);
}

TEST(OrderByCocycle, AgreesWithLexOrder) {
  const Point pts[] = {Pt("", "1"),  Pt("1", "2"),  Pt("2", "1"),
                       Pt("", "12"), Pt("21", "2"), Pt("22", "1"),
                       Pt("", "2"),  Pt("121", "12")};
  for (const Point& x : pts) {
    for (const Point& y : pts) {
      if (x == y) continue;
      EXPECT_EQ(OrderByCocycle(kBin, x, y), OrderCompare(kBin, x, y));
    }
  }
}

TEST(GapIndicesBelow, Monotone) {
  const Point pts[] = {Pt("", "1"), Pt("11", "2"), Pt("2", "1"), Pt("", "2")};
  for (std::size_t i = 0; i + 1 < std::size(pts); ++i) {
    auto lower = GapIndicesBelow(kBin, pts[i], 12);
    auto upper = GapIndicesBelow(kBin, pts[i + 1], 12);
    for (auto n : lower) {
      EXPECT_NE(std::find(upper.begin(), upper.end(), n), upper.end());
    }
  }
}

}  // namespace
}  // namespace boundfn
