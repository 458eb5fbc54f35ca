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

// The series coboundary btilde, its 1-cocycle ctilde, the canonical
// enumeration of gap-above points, and interval approximations of the
// gap-corrected injective 0-cocycle b.

#ifndef BOUNDFN_COCYCLE_HPP_
#define BOUNDFN_COCYCLE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "boundfn/order.hpp"

namespace boundfn {

using Rational = boost::multiprecision::cpp_rational;

std::string FormatRational(const Rational& r);

struct RationalInterval {
  Rational lo;
  Rational hi;
};

std::string FormatInterval(const RationalInterval& iv);

// sum_n (x_n - 1) / (k_1 ... k_n), exactly.
Rational BTilde(const RefinementSystem& sys, const Point& x);

// btilde(y) - btilde(x); throws NotInOrbit unless the tails agree.
Rational CTilde(const RefinementSystem& sys, const Point& x, const Point& y);

// Gap-above points a^(1), a^(2), ... ordered by the length of their minimal
// preamble w (last digit not maximal) and then lexicographically by w.
class GapEnumeration {
 public:
  explicit GapEnumeration(RefinementSystem sys) : sys_(std::move(sys)) {}

  // 1-based.
  Point GapPoint(std::uint64_t n) const;
  std::uint64_t GapIndex(const Point& a) const;

  const RefinementSystem& system() const { return sys_; }

 private:
  // Number of gap-above points whose minimal preamble has this length.
  std::uint64_t CountAtLevel(std::size_t level) const;

  RefinementSystem sys_;
};

// Interval of width <= eps containing b(x) = btilde(x) + sum_{a^(n) < x} 2^-n.
RationalInterval BApprox(const RefinementSystem& sys, const Point& x,
                         const Rational& eps);

// Orders distinct points by refining b until the intervals separate.
Ordering OrderByCocycle(const RefinementSystem& sys, const Point& x,
                        const Point& y);

// Indices n <= depth with a^(n) < x.
std::vector<std::uint64_t> GapIndicesBelow(const RefinementSystem& sys,
                                           const Point& x, std::size_t depth);

}  // namespace boundfn

#endif  // BOUNDFN_COCYCLE_HPP_
