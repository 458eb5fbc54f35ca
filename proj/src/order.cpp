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

#include "boundfn/order.hpp"

#include <algorithm>
#include <numeric>

namespace boundfn {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDigitOutOfRange: return "DigitOutOfRange";
    case ErrorKind::kMisalignedPeriod: return "MisalignedPeriod";
    case ErrorKind::kInvalidSystem: return "InvalidSystem";
    case ErrorKind::kEmptyInterval: return "EmptyInterval";
    case ErrorKind::kPartition: return "Partition";
    case ErrorKind::kNotInOrbit: return "NotInOrbit";
    case ErrorKind::kEqualPoints: return "EqualPoints";
    case ErrorKind::kNoGap: return "NoGap";
    case ErrorKind::kMalformedWord: return "MalformedWord";
    case ErrorKind::kOrderViolation: return "OrderViolation";
    case ErrorKind::kMixedModes: return "MixedModes";
    case ErrorKind::kConstraint: return "Constraint";
    case ErrorKind::kDepthExceeded: return "DepthExceeded";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kLevelMismatch: return "LevelMismatch";
    case ErrorKind::kParse: return "Parse";
    case ErrorKind::kUnresolvedName: return "UnresolvedName";
    case ErrorKind::kInternal: return "Internal";
  }
  return "Unknown";
}

const char* OrderingName(Ordering o) {
  switch (o) {
    case Ordering::kLess: return "LT";
    case Ordering::kEqual: return "EQ";
    case Ordering::kGreater: return "GT";
  }
  return "?";
}

std::size_t Lcm(std::size_t a, std::size_t b) { return std::lcm(a, b); }

RefinementSystem::RefinementSystem(DigitList prefix, DigitList cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) {
    throw Error(ErrorKind::kInvalidSystem, "system cycle must be nonempty");
  }
  for (Digit k : prefix_) {
    if (k < 2) throw Error(ErrorKind::kInvalidSystem, "every k_n must be >= 2");
  }
  for (Digit k : cycle_) {
    if (k < 2) throw Error(ErrorKind::kInvalidSystem, "every k_n must be >= 2");
  }
}

Digit RefinementSystem::radix(std::size_t n) const {
  if (n <= prefix_.size()) return prefix_[n - 1];
  return cycle_[(n - 1 - prefix_.size()) % cycle_.size()];
}

bool RefinementSystem::compact_digits() const {
  auto small = [](Digit k) { return k <= 9; };
  return std::all_of(prefix_.begin(), prefix_.end(), small) &&
         std::all_of(cycle_.begin(), cycle_.end(), small);
}

// ---------------------------------------------------------------------------
// Point

Digit Point::digit(std::size_t n) const {
  if (n <= preamble_.size()) return preamble_[n - 1];
  return period_[(n - 1 - preamble_.size()) % period_.size()];
}

std::strong_ordering Point::operator<=>(const Point& other) const {
  const std::size_t span =
      std::max(preamble_.size(), other.preamble_.size()) +
      Lcm(period_.size(), other.period_.size());
  for (std::size_t n = 1; n <= span; ++n) {
    Digit a = digit(n);
    Digit b = other.digit(n);
    if (a != b) return a < b ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

DigitList PrimitiveRoot(const DigitList& period) {
  const std::size_t len = period.size();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < len && ok; ++i) ok = period[i] == period[i - d];
    if (ok) return DigitList(period.begin(), period.begin() + d);
  }
  return period;
}

}  // namespace

Point Point::FromPartsUnchecked(DigitList preamble, DigitList period) {
  if (period.empty()) {
    throw Error(ErrorKind::kMisalignedPeriod, "period must be nonempty");
  }
  Point p;
  p.period_ = PrimitiveRoot(period);
  p.preamble_ = std::move(preamble);
  while (!p.preamble_.empty() && p.preamble_.back() == p.period_.back()) {
    p.preamble_.pop_back();
    std::rotate(p.period_.rbegin(), p.period_.rbegin() + 1, p.period_.rend());
  }
  return p;
}

namespace {

std::string FormatDigits(const DigitList& digits, bool compact) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!compact && i > 0) out += '.';
    out += std::to_string(digits[i]);
  }
  return out;
}

bool AllCompact(const DigitList& digits) {
  for (Digit d : digits) {
    if (d > 9) return false;
  }
  return true;
}

}  // namespace

std::string FormatPoint(const Point& x) {
  const bool compact = AllCompact(x.preamble()) && AllCompact(x.period());
  std::string out = FormatDigits(x.preamble(), compact) + "|" +
                    FormatDigits(x.period(), compact);
  if (!compact && out.find('.') == std::string::npos) {
    // A dotted literal must contain a dot to be told apart from a compact
    // one; spelling the period twice names the same point.
    out += "." + FormatDigits(x.period(), false);
  }
  return out;
}

std::string FormatWord(const Word& w) {
  if (w.digits.empty()) return "e";
  const bool compact = AllCompact(w.digits);
  std::string out = FormatDigits(w.digits, compact);
  if (!compact && w.digits.size() == 1) out += '.';
  return out;
}

Point CanonicalizePoint(const RefinementSystem& sys, DigitList preamble,
                        DigitList period) {
  if (period.empty()) {
    throw Error(ErrorKind::kMisalignedPeriod, "period must be nonempty");
  }
  for (std::size_t n = 1; n <= preamble.size(); ++n) {
    Digit d = preamble[n - 1];
    if (d < 1 || d > sys.radix(n)) {
      throw Error(ErrorKind::kDigitOutOfRange,
                  "digit " + std::to_string(d) + " out of range at position " +
                      std::to_string(n));
    }
  }
  const std::size_t start = preamble.size();
  const std::size_t span =
      std::max<std::size_t>(sys.prefix().size(), start) - start +
      Lcm(period.size(), sys.cycle().size());
  for (std::size_t j = 0; j < std::max(span, period.size()); ++j) {
    const std::size_t n = start + j + 1;
    Digit d = period[j % period.size()];
    if (d < 1 || d > sys.radix(n)) {
      throw Error(j < period.size() ? ErrorKind::kDigitOutOfRange
                                    : ErrorKind::kMisalignedPeriod,
                  "digit " + std::to_string(d) + " out of range at position " +
                      std::to_string(n));
    }
  }
  return Point::FromPartsUnchecked(std::move(preamble), std::move(period));
}

void CheckPoint(const RefinementSystem& sys, const Point& x) {
  CanonicalizePoint(sys, x.preamble(), x.period());
}

Point PMin(const RefinementSystem&) { return Point(); }

Point PMax(const RefinementSystem& sys) {
  return Point::FromPartsUnchecked(sys.prefix(), sys.cycle());
}

Ordering OrderCompare(const RefinementSystem&, const Point& x, const Point& y) {
  auto c = x <=> y;
  if (c < 0) return Ordering::kLess;
  if (c > 0) return Ordering::kGreater;
  return Ordering::kEqual;
}

bool OrbitTest(const Point& x, const Point& y) {
  const std::size_t start = std::max(x.preamble().size(), y.preamble().size());
  const std::size_t span = Lcm(x.period().size(), y.period().size());
  for (std::size_t n = start + 1; n <= start + span; ++n) {
    if (x.digit(n) != y.digit(n)) return false;
  }
  return true;
}

bool PTest(const Point& x, const Point& y) { return OrbitTest(x, y) && x <= y; }

namespace {

// First position from which x agrees with the all-max sequence, or 0 if it
// never does.
std::size_t MaxTailStart(const RefinementSystem& sys, const Point& x) {
  const std::size_t start =
      std::max(x.preamble().size(), sys.prefix().size()) + 1;
  const std::size_t span = Lcm(x.period().size(), sys.cycle().size());
  for (std::size_t n = start; n < start + span; ++n) {
    if (x.digit(n) != sys.radix(n)) return 0;
  }
  std::size_t m = start;
  while (m > 1 && x.digit(m - 1) == sys.radix(m - 1)) --m;
  return m;
}

}  // namespace

bool HasGapAbove(const RefinementSystem& sys, const Point& x) {
  std::size_t m = MaxTailStart(sys, x);
  return m > 1;
}

bool HasGapBelow(const Point& x) {
  return x.period().size() == 1 && x.period()[0] == 1 && !x.preamble().empty();
}

std::optional<Point> Successor(const RefinementSystem& sys, const Point& x) {
  std::size_t m = MaxTailStart(sys, x);
  if (m <= 1) return std::nullopt;
  DigitList pre(m - 1);
  for (std::size_t n = 1; n < m; ++n) pre[n - 1] = x.digit(n);
  pre.back() += 1;
  return Point::FromPartsUnchecked(std::move(pre), {1});
}

std::optional<Point> Predecessor(const RefinementSystem& sys, const Point& x) {
  if (!HasGapBelow(x)) return std::nullopt;
  Word w{x.preamble()};
  w.digits.back() -= 1;
  return Splice(sys, w, PMax(sys));
}

GapProbe ProbeGaps(const RefinementSystem& sys, const Point& x) {
  GapProbe g;
  g.suc = Successor(sys, x);
  g.pred = Predecessor(sys, x);
  g.gap_above = g.suc.has_value();
  g.gap_below = g.pred.has_value();
  return g;
}

void CheckWord(const RefinementSystem& sys, const Word& w) {
  for (std::size_t n = 1; n <= w.digits.size(); ++n) {
    Digit d = w.digits[n - 1];
    if (d < 1 || d > sys.radix(n)) {
      throw Error(ErrorKind::kMalformedWord,
                  "word digit " + std::to_string(d) + " out of range at " +
                      std::to_string(n));
    }
  }
}

Word Prefix(const Point& x, std::size_t level) {
  Word w;
  w.digits.resize(level);
  for (std::size_t n = 1; n <= level; ++n) w.digits[n - 1] = x.digit(n);
  return w;
}

std::optional<Word> NextWord(const RefinementSystem& sys, const Word& w) {
  Word out = w;
  for (std::size_t n = out.digits.size(); n >= 1; --n) {
    if (out.digits[n - 1] < sys.radix(n)) {
      ++out.digits[n - 1];
      return out;
    }
    out.digits[n - 1] = 1;
  }
  return std::nullopt;
}

std::optional<Word> PrevWord(const RefinementSystem& sys, const Word& w) {
  Word out = w;
  for (std::size_t n = out.digits.size(); n >= 1; --n) {
    if (out.digits[n - 1] > 1) {
      --out.digits[n - 1];
      return out;
    }
    out.digits[n - 1] = sys.radix(n);
  }
  return std::nullopt;
}

std::vector<Word> AllWords(const RefinementSystem& sys, std::size_t level) {
  std::vector<Word> out;
  Word w{DigitList(level, 1)};
  out.push_back(w);
  while (auto next = NextWord(sys, out.back())) out.push_back(*next);
  return out;
}

Point Splice(const RefinementSystem&, const Word& u, const Point& x) {
  const std::size_t n = u.level();
  const std::size_t pre = x.preamble().size();
  DigitList head = u.digits;
  DigitList period;
  if (n >= pre) {
    const std::size_t len = x.period().size();
    const std::size_t shift = (n - pre) % len;
    period.reserve(len);
    for (std::size_t j = 0; j < len; ++j) {
      period.push_back(x.period()[(shift + j) % len]);
    }
  } else {
    head.insert(head.end(), x.preamble().begin() + n, x.preamble().end());
    period = x.period();
  }
  return Point::FromPartsUnchecked(std::move(head), std::move(period));
}

std::pair<Point, Point> CylinderBounds(const RefinementSystem& sys,
                                       const Word& u) {
  CheckWord(sys, u);
  return {Splice(sys, u, PMin(sys)), Splice(sys, u, PMax(sys))};
}

bool InCylinder(const Point& x, const Word& u) {
  for (std::size_t n = 1; n <= u.level(); ++n) {
    if (x.digit(n) != u.digits[n - 1]) return false;
  }
  return true;
}

Point GenericTail() { return Point::FromPartsUnchecked({}, {1, 2}); }

Horizon JointHorizon(const RefinementSystem& sys,
                     std::span<const Point> points) {
  Horizon h;
  h.settle = sys.prefix().size();
  h.period = sys.cycle().size();
  for (const Point& p : points) {
    h.settle = std::max(h.settle, p.preamble().size());
    h.period = Lcm(h.period, p.period().size());
  }
  return h;
}

std::optional<Point> PointBetween(const RefinementSystem& sys, const Point& x,
                                  const Point& y, const Point& orbit_of) {
  if (!(x < y)) {
    throw Error(ErrorKind::kOrderViolation, "PointBetween requires x < y");
  }
  const Point pts[] = {x, y};
  Horizon h = JointHorizon(sys, pts);
  const std::size_t bound = h.settle + 2 * h.period + 2;
  for (std::size_t m = 1; m <= bound; ++m) {
    Word a = Prefix(x, m);
    Word b = Prefix(y, m);
    if (!(a < b)) continue;
    auto next = NextWord(sys, a);
    if (next && *next < b) return Splice(sys, *next, orbit_of);
    // The cylinder of a itself may hold points above x.
    Point top = Splice(sys, a, orbit_of);
    if (x < top && top < y) return top;
    Point bottom = Splice(sys, b, orbit_of);
    if (x < bottom && bottom < y) return bottom;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// OrderInterval

std::optional<OrderInterval> OrderInterval::TryMake(const RefinementSystem& sys,
                                                    Point lo, bool lo_closed,
                                                    Point hi, bool hi_closed) {
  if (!lo_closed) {
    if (auto s = Successor(sys, lo)) {
      lo = *s;
      lo_closed = true;
    }
  }
  if (!hi_closed) {
    if (auto p = Predecessor(sys, hi)) {
      hi = *p;
      hi_closed = true;
    }
  }
  if (hi < lo) return std::nullopt;
  if (lo == hi && !(lo_closed && hi_closed)) return std::nullopt;
  return OrderInterval(std::move(lo), lo_closed, std::move(hi), hi_closed);
}

OrderInterval OrderInterval::Make(const RefinementSystem& sys, Point lo,
                                  bool lo_closed, Point hi, bool hi_closed) {
  auto r = TryMake(sys, std::move(lo), lo_closed, std::move(hi), hi_closed);
  if (!r) throw Error(ErrorKind::kEmptyInterval, "empty order interval");
  return *r;
}

OrderInterval OrderInterval::Whole(const RefinementSystem& sys) {
  return Closed(sys, PMin(sys), PMax(sys));
}

bool OrderInterval::Contains(const Point& y) const {
  auto lo = lo_ <=> y;
  if (lo > 0 || (lo == 0 && !lo_closed_)) return false;
  auto hi = y <=> hi_;
  if (hi > 0 || (hi == 0 && !hi_closed_)) return false;
  return true;
}

bool OrderInterval::IsGapPair(const RefinementSystem& sys) const {
  if (!lo_closed_ || !hi_closed_ || lo_ == hi_) return false;
  auto s = Successor(sys, lo_);
  return s && *s == hi_;
}

std::optional<OrderInterval> Intersect(const RefinementSystem& sys,
                                       const OrderInterval& a,
                                       const OrderInterval& b) {
  Point lo;
  bool lo_closed;
  if (a.lo() == b.lo()) {
    lo = a.lo();
    lo_closed = a.lo_closed() && b.lo_closed();
  } else if (a.lo() < b.lo()) {
    lo = b.lo();
    lo_closed = b.lo_closed();
  } else {
    lo = a.lo();
    lo_closed = a.lo_closed();
  }
  Point hi;
  bool hi_closed;
  if (a.hi() == b.hi()) {
    hi = a.hi();
    hi_closed = a.hi_closed() && b.hi_closed();
  } else if (a.hi() < b.hi()) {
    hi = a.hi();
    hi_closed = a.hi_closed();
  } else {
    hi = b.hi();
    hi_closed = b.hi_closed();
  }
  return OrderInterval::TryMake(sys, lo, lo_closed, hi, hi_closed);
}

}  // namespace boundfn
