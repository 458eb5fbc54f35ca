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

// Boundary functions as ordered lists of order-interval pieces, each carrying
// one of three leaf formulas: the identity, the identity lowered across gaps
// (y -> pred y when y has a gap below), or a constant.

#ifndef BOUNDFN_PIECEWISE_HPP_
#define BOUNDFN_PIECEWISE_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "boundfn/order.hpp"

namespace boundfn {

// Ideal sets live in P; A-module sets live in G and drop the x <= y
// requirement.
enum class SetMode { kIdeal, kModule };

const char* SetModeName(SetMode mode);

struct Leaf {
  enum class Kind { kIdentity, kIdentityMinus, kConst };

  Kind kind = Kind::kIdentity;
  Point value;  // meaningful for kConst only

  static Leaf Identity() { return {Kind::kIdentity, Point()}; }
  static Leaf IdentityMinus() { return {Kind::kIdentityMinus, Point()}; }
  static Leaf Const(Point c) { return {Kind::kConst, std::move(c)}; }

  bool operator==(const Leaf& other) const {
    return kind == other.kind && (kind != Kind::kConst || value == other.value);
  }
};

Point LeafValue(const RefinementSystem& sys, const Leaf& leaf, const Point& y);

struct Piece {
  OrderInterval span;
  Leaf leaf;

  bool operator==(const Piece&) const = default;
};

// A total function X -> X given piecewise.  Instances are always in normal
// form, so operator== is extensional equality.
class PiecewiseBF {
 public:
  // Checks that the spans partition X and normalizes.  Does not check the
  // boundary-function axioms; see ValidateBF.
  static PiecewiseBF Make(const RefinementSystem& sys, std::vector<Piece> pieces,
                          SetMode mode = SetMode::kIdeal);

  static PiecewiseBF Identity(const RefinementSystem& sys,
                              SetMode mode = SetMode::kIdeal);
  static PiecewiseBF Constant(const RefinementSystem& sys, const Point& c,
                              SetMode mode = SetMode::kIdeal);

  const std::vector<Piece>& pieces() const { return pieces_; }
  SetMode mode() const { return mode_; }

  bool operator==(const PiecewiseBF&) const = default;

 private:
  PiecewiseBF(std::vector<Piece> pieces, SetMode mode)
      : pieces_(std::move(pieces)), mode_(mode) {}

  std::vector<Piece> pieces_;
  SetMode mode_;
};

// "{[lo, hi) -> id; [hi, p] -> const(c)}", prefixed by "module:" for module
// sets.
std::string FormatLeaf(const Leaf& leaf);
std::string FormatInterval(const OrderInterval& span);
std::string FormatBF(const PiecewiseBF& phi);

inline void PrintTo(const PiecewiseBF& phi, std::ostream* os) {
  *os << FormatBF(phi);
}

std::size_t FindPiece(const PiecewiseBF& phi, const Point& y);
Point EvalBF(const RefinementSystem& sys, const PiecewiseBF& phi,
             const Point& y);

// Extreme values of a leaf over its span, with attainment.
struct ValueBound {
  Point value;
  bool attained = true;
};
ValueBound PieceSup(const RefinementSystem& sys, const Piece& piece);
ValueBound PieceInf(const RefinementSystem& sys, const Piece& piece);

// phi^-: values with a gap below are replaced by their predecessors.
PiecewiseBF BFMinus(const RefinementSystem& sys, const PiecewiseBF& phi);

enum class LatticeOp { kJoin, kMeet };

// Pointwise max (join) or min (meet).
PiecewiseBF BFLattice(LatticeOp op, const RefinementSystem& sys,
                      const PiecewiseBF& phi, const PiecewiseBF& psi);

// phi(y) <= psi(y) for every y.
bool BFLessEq(const RefinementSystem& sys, const PiecewiseBF& phi,
              const PiecewiseBF& psi);

// Replaces the function on `span` by `leaf`, leaving it unchanged elsewhere.
PiecewiseBF Overwrite(const RefinementSystem& sys, const PiecewiseBF& phi,
                      const OrderInterval& span, const Leaf& leaf);

// Tests over a linked cylinder pair: for every tail w,
//   kEta:    a.w <= phi(b.w)
//   kStrict: a.w <  phi(b.w)
//   kRaised: a.w <= phi(b.w), or a.w <= suc phi(b.w) where phi(b.w) has a
//            gap above.
enum class CylinderTest { kEta, kStrict, kRaised };

bool LinkedCylinderBelow(const RefinementSystem& sys, const PiecewiseBF& phi,
                         const Word& a, const Word& b, CylinderTest test);

}  // namespace boundfn

#endif  // BOUNDFN_PIECEWISE_HPP_
