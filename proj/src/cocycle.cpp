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

#include "boundfn/cocycle.hpp"

#include <limits>
#include <sstream>

namespace boundfn {

std::string FormatRational(const Rational& r) {
  std::ostringstream os;
  os << numerator(r) << "/" << denominator(r);
  return os.str();
}

std::string FormatInterval(const RationalInterval& iv) {
  return "[" + FormatRational(iv.lo) + ", " + FormatRational(iv.hi) + "]";
}

Rational BTilde(const RefinementSystem& sys, const Point& x) {
  const std::size_t settle =
      std::max(x.preamble().size(), sys.prefix().size());
  const std::size_t block = Lcm(x.period().size(), sys.cycle().size());
  Rational sum = 0;
  boost::multiprecision::cpp_int denom = 1;
  for (std::size_t n = 1; n <= settle; ++n) {
    denom *= sys.radix(n);
    sum += Rational(x.digit(n) - 1, denom);
  }
  // One block of the periodic tail, then the geometric factor R / (R - 1)
  // where R is the product of the radices over the block.
  Rational block_sum = 0;
  boost::multiprecision::cpp_int ratio = 1;
  for (std::size_t n = settle + 1; n <= settle + block; ++n) {
    denom *= sys.radix(n);
    ratio *= sys.radix(n);
    block_sum += Rational(x.digit(n) - 1, denom);
  }
  sum += block_sum * Rational(ratio, ratio - 1);
  return sum;
}

Rational CTilde(const RefinementSystem& sys, const Point& x, const Point& y) {
  if (!OrbitTest(x, y)) {
    throw Error(ErrorKind::kNotInOrbit, "ctilde requires points in one orbit");
  }
  return BTilde(sys, y) - BTilde(sys, x);
}

namespace {

std::uint64_t CheckedMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw Error(ErrorKind::kCapExceeded, "gap enumeration index overflow");
  }
  return a * b;
}

}  // namespace

std::uint64_t GapEnumeration::CountAtLevel(std::size_t level) const {
  std::uint64_t count = sys_.radix(level) - 1;
  for (std::size_t i = 1; i < level; ++i) count = CheckedMul(count, sys_.radix(i));
  return count;
}

Point GapEnumeration::GapPoint(std::uint64_t n) const {
  if (n == 0) throw Error(ErrorKind::kConstraint, "gap index is 1-based");
  std::size_t level = 1;
  std::uint64_t rank = n - 1;
  while (true) {
    std::uint64_t count = CountAtLevel(level);
    if (rank < count) break;
    rank -= count;
    ++level;
  }
  Word w{DigitList(level, 1)};
  const std::uint64_t last_choices = sys_.radix(level) - 1;
  w.digits[level - 1] = static_cast<Digit>(rank % last_choices + 1);
  rank /= last_choices;
  for (std::size_t i = level - 1; i >= 1; --i) {
    w.digits[i - 1] = static_cast<Digit>(rank % sys_.radix(i) + 1);
    rank /= sys_.radix(i);
  }
  return Splice(sys_, w, PMax(sys_));
}

std::uint64_t GapEnumeration::GapIndex(const Point& a) const {
  auto suc = Successor(sys_, a);
  if (!suc) throw Error(ErrorKind::kNoGap, "point has no gap above");
  const std::size_t level = suc->preamble().size();
  std::uint64_t index = 0;
  for (std::size_t l = 1; l < level; ++l) index += CountAtLevel(l);
  std::uint64_t rank = 0;
  for (std::size_t i = 1; i < level; ++i) {
    rank = CheckedMul(rank, sys_.radix(i)) + (a.digit(i) - 1);
  }
  rank = CheckedMul(rank, sys_.radix(level) - 1) + (a.digit(level) - 1);
  return index + rank + 1;
}

std::vector<std::uint64_t> GapIndicesBelow(const RefinementSystem& sys,
                                           const Point& x, std::size_t depth) {
  GapEnumeration gaps(sys);
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= depth; ++n) {
    if (gaps.GapPoint(n) < x) out.push_back(n);
  }
  return out;
}

RationalInterval BApprox(const RefinementSystem& sys, const Point& x,
                         const Rational& eps) {
  if (eps <= 0) throw Error(ErrorKind::kConstraint, "eps must be positive");
  Rational bt = BTilde(sys, x);
  if (x == PMin(sys)) return {bt, bt};
  std::size_t depth = 0;
  Rational width = 1;
  while (width > eps) {
    width /= 2;
    ++depth;
  }
  Rational partial = 0;
  for (std::uint64_t n : GapIndicesBelow(sys, x, depth)) {
    partial += Rational(1, boost::multiprecision::cpp_int(1) << n);
  }
  return {bt + partial, bt + partial + width};
}

Ordering OrderByCocycle(const RefinementSystem& sys, const Point& x,
                        const Point& y) {
  if (x == y) throw Error(ErrorKind::kEqualPoints, "points are equal");
  Rational eps = 1;
  for (int step = 0; step < 512; ++step) {
    RationalInterval bx = BApprox(sys, x, eps);
    RationalInterval by = BApprox(sys, y, eps);
    if (bx.hi < by.lo) return Ordering::kLess;
    if (by.hi < bx.lo) return Ordering::kGreater;
    eps /= 2;
  }
  throw Error(ErrorKind::kDepthExceeded, "cocycle intervals did not separate");
}

}  // namespace boundfn
