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

// Points of the Cantor space X = prod {1..k_n}, the lexicographic order on
// X, the tails-equal relation G and its triangular part P, gaps, and
// cylinders.  Only eventually periodic points are representable.

#ifndef BOUNDFN_ORDER_HPP_
#define BOUNDFN_ORDER_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace boundfn {

using Digit = std::uint16_t;
using DigitList = std::vector<Digit>;

enum class ErrorKind {
  kDigitOutOfRange,
  kMisalignedPeriod,
  kInvalidSystem,
  kEmptyInterval,
  kPartition,
  kNotInOrbit,
  kEqualPoints,
  kNoGap,
  kMalformedWord,
  kOrderViolation,
  kMixedModes,
  kConstraint,
  kDepthExceeded,
  kCapExceeded,
  kLevelMismatch,
  kParse,
  kUnresolvedName,
  kInternal,
};

const char* ErrorKindName(ErrorKind kind);

// All library failures are reported with this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

std::size_t Lcm(std::size_t a, std::size_t b);

// Digit-alphabet sizes k_1, k_2, ...: a finite prefix followed by a cycle
// repeated forever.  Every k_n is at least 2.
class RefinementSystem {
 public:
  RefinementSystem(DigitList prefix, DigitList cycle);

  static RefinementSystem Binary() { return RefinementSystem({}, {2}); }

  // k_n for 1-based position n.
  Digit radix(std::size_t n) const;

  const DigitList& prefix() const { return prefix_; }
  const DigitList& cycle() const { return cycle_; }

  // True when every digit fits in one decimal character.
  bool compact_digits() const;

  bool operator==(const RefinementSystem&) const = default;

 private:
  DigitList prefix_;
  DigitList cycle_;
};

// A finite word d_1..d_N at level N.  Words of equal length compare
// lexicographically.
struct Word {
  DigitList digits;

  std::size_t level() const { return digits.size(); }
  auto operator<=>(const Word&) const = default;
};

// An eventually periodic point in canonical form: the period is primitive
// and the preamble is as short as possible.  Structural equality is point
// equality and operator<=> is the lexicographic order on X.
class Point {
 public:
  Point() : period_{1} {}

  const DigitList& preamble() const { return preamble_; }
  const DigitList& period() const { return period_; }

  // Digit at 1-based position n.
  Digit digit(std::size_t n) const;

  bool operator==(const Point& other) const {
    return preamble_ == other.preamble_ && period_ == other.period_;
  }
  std::strong_ordering operator<=>(const Point& other) const;

  // Builds a canonical point from an arbitrary preamble/period pair that
  // has already been checked against a system.
  static Point FromPartsUnchecked(DigitList preamble, DigitList period);

 private:
  DigitList preamble_;
  DigitList period_;
};

// "pre|per", with digits run together when all are below 10 and separated
// by dots otherwise.  p_min in the binary system prints as "|1".
std::string FormatPoint(const Point& x);
std::string FormatWord(const Word& w);

enum class Ordering { kLess, kEqual, kGreater };

const char* OrderingName(Ordering o);

Point CanonicalizePoint(const RefinementSystem& sys, DigitList preamble,
                        DigitList period);

// Throws unless every digit of x respects the bounds of sys.
void CheckPoint(const RefinementSystem& sys, const Point& x);

Point PMin(const RefinementSystem& sys);
Point PMax(const RefinementSystem& sys);

Ordering OrderCompare(const RefinementSystem& sys, const Point& x,
                      const Point& y);

// Tails eventually agree.
bool OrbitTest(const Point& x, const Point& y);

// (x, y) in P: same orbit and x <= y.
bool PTest(const Point& x, const Point& y);

bool HasGapAbove(const RefinementSystem& sys, const Point& x);
bool HasGapBelow(const Point& x);

std::optional<Point> Successor(const RefinementSystem& sys, const Point& x);
std::optional<Point> Predecessor(const RefinementSystem& sys, const Point& x);

struct GapProbe {
  bool gap_above = false;
  bool gap_below = false;
  std::optional<Point> suc;
  std::optional<Point> pred;
};

GapProbe ProbeGaps(const RefinementSystem& sys, const Point& x);

void CheckWord(const RefinementSystem& sys, const Word& w);

Word Prefix(const Point& x, std::size_t level);

// The word that immediately follows w at its own level, if any.
std::optional<Word> NextWord(const RefinementSystem& sys, const Word& w);
std::optional<Word> PrevWord(const RefinementSystem& sys, const Word& w);

// All level-N words in lexicographic order.
std::vector<Word> AllWords(const RefinementSystem& sys, std::size_t level);

// The point u_1..u_N x_{N+1} x_{N+2} ...
Point Splice(const RefinementSystem& sys, const Word& u, const Point& x);

// (u . all-min tail, u . all-max tail).
std::pair<Point, Point> CylinderBounds(const RefinementSystem& sys,
                                       const Word& u);

bool InCylinder(const Point& x, const Word& u);

// A point z with x < z < y whose tail is the tail of `orbit_of`, or nullopt
// when (x, y) is a gap pair.  Requires x < y.
std::optional<Point> PointBetween(const RefinementSystem& sys, const Point& x,
                                  const Point& y, const Point& orbit_of);

// A point with neither a gap above nor a gap below, used as an orbit
// representative by constructions that need "generic" points.
Point GenericTail();

// Number of leading positions after which the digits of every listed point
// and the system radices are jointly periodic, and that joint period.
struct Horizon {
  std::size_t settle = 0;
  std::size_t period = 1;
};
Horizon JointHorizon(const RefinementSystem& sys,
                     std::span<const Point> points);

// Closed/open order interval with eventually periodic endpoints.  Stored in
// normal form: an endpoint is open only when it cannot be closed by moving
// across a gap.
class OrderInterval {
 public:
  static OrderInterval Make(const RefinementSystem& sys, Point lo,
                            bool lo_closed, Point hi, bool hi_closed);
  static OrderInterval Closed(const RefinementSystem& sys, Point lo, Point hi) {
    return Make(sys, std::move(lo), true, std::move(hi), true);
  }
  static OrderInterval Whole(const RefinementSystem& sys);

  // Like Make but returns nullopt for an empty interval.
  static std::optional<OrderInterval> TryMake(const RefinementSystem& sys,
                                              Point lo, bool lo_closed,
                                              Point hi, bool hi_closed);

  const Point& lo() const { return lo_; }
  const Point& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

  bool Contains(const Point& y) const;
  bool IsSingleton() const { return lo_closed_ && hi_closed_ && lo_ == hi_; }
  // Exactly two points {lo, suc lo}.
  bool IsGapPair(const RefinementSystem& sys) const;

  bool operator==(const OrderInterval&) const = default;

 private:
  OrderInterval(Point lo, bool lo_closed, Point hi, bool hi_closed)
      : lo_(std::move(lo)),
        hi_(std::move(hi)),
        lo_closed_(lo_closed),
        hi_closed_(hi_closed) {}

  Point lo_;
  Point hi_;
  bool lo_closed_;
  bool hi_closed_;
};

std::optional<OrderInterval> Intersect(const RefinementSystem& sys,
                                       const OrderInterval& a,
                                       const OrderInterval& b);

}  // namespace boundfn

#endif  // BOUNDFN_ORDER_HPP_
