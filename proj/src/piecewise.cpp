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

#include "boundfn/piecewise.hpp"

#include <algorithm>
#include <optional>

namespace boundfn {

const char* SetModeName(SetMode mode) {
  return mode == SetMode::kIdeal ? "ideal" : "module";
}

Point LeafValue(const RefinementSystem& sys, const Leaf& leaf, const Point& y) {
  switch (leaf.kind) {
    case Leaf::Kind::kIdentity:
      return y;
    case Leaf::Kind::kIdentityMinus:
      if (auto p = Predecessor(sys, y)) return *p;
      return y;
    case Leaf::Kind::kConst:
      return leaf.value;
  }
  return y;
}

namespace {

bool IsFinite(const RefinementSystem& sys, const OrderInterval& span) {
  return span.IsSingleton() || span.IsGapPair(sys);
}

// Finite pieces rank below every infinite one so their points are absorbed
// by any neighbour that already takes the same value there.
int Priority(const RefinementSystem& sys, const Piece& piece) {
  if (IsFinite(sys, piece.span)) return 0;
  switch (piece.leaf.kind) {
    case Leaf::Kind::kConst: return 3;
    case Leaf::Kind::kIdentityMinus: return 2;
    case Leaf::Kind::kIdentity: return 1;
  }
  return 0;
}

void CheckPartition(const RefinementSystem& sys,
                    const std::vector<Piece>& pieces) {
  if (pieces.empty()) {
    throw Error(ErrorKind::kPartition, "piece list is empty");
  }
  const Piece& first = pieces.front();
  const Piece& last = pieces.back();
  if (!(first.span.lo() == PMin(sys) && first.span.lo_closed())) {
    throw Error(ErrorKind::kPartition, "first piece must start at p_min");
  }
  if (!(last.span.hi() == PMax(sys) && last.span.hi_closed())) {
    throw Error(ErrorKind::kPartition, "last piece must end at p_max");
  }
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    const OrderInterval& a = pieces[i].span;
    const OrderInterval& b = pieces[i + 1].span;
    bool contiguous = false;
    if (a.hi() == b.lo()) {
      contiguous = a.hi_closed() != b.lo_closed();
    } else if (a.hi_closed() && b.lo_closed()) {
      auto s = Successor(sys, a.hi());
      contiguous = s && *s == b.lo();
    }
    if (!contiguous) {
      throw Error(ErrorKind::kPartition,
                  "pieces " + std::to_string(i) + " and " +
                      std::to_string(i + 1) + " overlap or leave a hole");
    }
  }
}

// Folds representations that denote the same function into one shape.
// Equal neighbours merge, and a boundary point on which two neighbouring
// leaves agree belongs to the higher-priority piece.  What is left over are
// finite runs of one or two points, whose leaves are then fixed by their
// values alone.
bool MergeAndTransfer(const RefinementSystem& sys, std::vector<Piece>& pieces) {
  bool changed = false;
  for (std::size_t i = 0; i + 1 < pieces.size();) {
    if (pieces[i].leaf == pieces[i + 1].leaf) {
      pieces[i].span = OrderInterval::Make(
          sys, pieces[i].span.lo(), pieces[i].span.lo_closed(),
          pieces[i + 1].span.hi(), pieces[i + 1].span.hi_closed());
      pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      changed = true;
    } else {
      ++i;
    }
  }
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    Piece& a = pieces[i];
    Piece& b = pieces[i + 1];
    const int pa = Priority(sys, a);
    const int pb = Priority(sys, b);
    if (a.span.hi_closed() && pb > pa) {
      const Point p = a.span.hi();
      if (LeafValue(sys, a.leaf, p) == LeafValue(sys, b.leaf, p)) {
        b.span =
            OrderInterval::Make(sys, p, true, b.span.hi(), b.span.hi_closed());
        auto rest = OrderInterval::TryMake(sys, a.span.lo(), a.span.lo_closed(),
                                           p, false);
        if (rest) {
          a.span = *rest;
        } else {
          pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(i));
        }
        return true;
      }
    }
    if (b.span.lo_closed() && pa > pb) {
      const Point q = b.span.lo();
      if (LeafValue(sys, a.leaf, q) == LeafValue(sys, b.leaf, q)) {
        a.span =
            OrderInterval::Make(sys, a.span.lo(), a.span.lo_closed(), q, true);
        auto rest = OrderInterval::TryMake(sys, q, false, b.span.hi(),
                                           b.span.hi_closed());
        if (rest) {
          b.span = *rest;
        } else {
          pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        }
        return true;
      }
    }
  }
  return changed;
}

Leaf SingletonLeaf(const Point& p, const Point& value) {
  return value == p ? Leaf::Identity() : Leaf::Const(value);
}

// Leaf for the finite run {lo, suc lo} with the given values, if one leaf
// covers both points.
std::optional<Leaf> GapPairLeaf(const OrderInterval& s, const Point& v1,
                                const Point& v2) {
  if (v1 == s.lo() && v2 == s.hi()) return Leaf::Identity();
  if (v1 == v2) return Leaf::Const(v1);
  return std::nullopt;
}

// Gives each finite run of one or two points the leaf its values dictate.
bool FixFiniteLeaves(const RefinementSystem& sys, std::vector<Piece>& pieces) {
  bool changed = false;
  std::vector<Piece> out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& piece = pieces[i];
    const OrderInterval& s = piece.span;
    if (s.IsSingleton() && i + 1 < pieces.size() &&
        pieces[i + 1].span.IsSingleton()) {
      const Piece& next = pieces[i + 1];
      auto pair = OrderInterval::Closed(sys, s.lo(), next.span.lo());
      if (pair.IsGapPair(sys)) {
        auto leaf = GapPairLeaf(pair, LeafValue(sys, piece.leaf, s.lo()),
                                LeafValue(sys, next.leaf, next.span.lo()));
        if (leaf) {
          out.push_back({pair, *leaf});
          changed = true;
          ++i;
          continue;
        }
      }
    }
    if (s.IsSingleton()) {
      Leaf leaf = SingletonLeaf(s.lo(), LeafValue(sys, piece.leaf, s.lo()));
      changed = changed || !(leaf == piece.leaf);
      out.push_back({s, leaf});
    } else if (s.IsGapPair(sys)) {
      const Point v1 = LeafValue(sys, piece.leaf, s.lo());
      const Point v2 = LeafValue(sys, piece.leaf, s.hi());
      if (auto leaf = GapPairLeaf(s, v1, v2)) {
        changed = changed || !(*leaf == piece.leaf);
        out.push_back({s, *leaf});
      } else {
        out.push_back({OrderInterval::Closed(sys, s.lo(), s.lo()),
                       SingletonLeaf(s.lo(), v1)});
        out.push_back({OrderInterval::Closed(sys, s.hi(), s.hi()),
                       SingletonLeaf(s.hi(), v2)});
        changed = true;
      }
    } else {
      out.push_back(piece);
    }
  }
  pieces = std::move(out);
  return changed;
}

void Normalize(const RefinementSystem& sys, std::vector<Piece>& pieces) {
  for (int round = 0; round < 100000; ++round) {
    if (MergeAndTransfer(sys, pieces)) continue;
    if (!FixFiniteLeaves(sys, pieces)) return;
  }
  throw Error(ErrorKind::kInternal, "normalization did not converge");
}

}  // namespace

PiecewiseBF PiecewiseBF::Make(const RefinementSystem& sys,
                              std::vector<Piece> pieces, SetMode mode) {
  CheckPartition(sys, pieces);
  Normalize(sys, pieces);
  CheckPartition(sys, pieces);
  return PiecewiseBF(std::move(pieces), mode);
}

PiecewiseBF PiecewiseBF::Identity(const RefinementSystem& sys, SetMode mode) {
  return Make(sys, {Piece{OrderInterval::Whole(sys), Leaf::Identity()}}, mode);
}

PiecewiseBF PiecewiseBF::Constant(const RefinementSystem& sys, const Point& c,
                                  SetMode mode) {
  return Make(sys, {Piece{OrderInterval::Whole(sys), Leaf::Const(c)}}, mode);
}

std::string FormatLeaf(const Leaf& leaf) {
  switch (leaf.kind) {
    case Leaf::Kind::kIdentity: return "id";
    case Leaf::Kind::kIdentityMinus: return "id-";
    case Leaf::Kind::kConst: return "const(" + FormatPoint(leaf.value) + ")";
  }
  return "?";
}

std::string FormatInterval(const OrderInterval& span) {
  return std::string(span.lo_closed() ? "[" : "(") + FormatPoint(span.lo()) +
         ", " + FormatPoint(span.hi()) + (span.hi_closed() ? "]" : ")");
}

std::string FormatBF(const PiecewiseBF& phi) {
  std::string out = phi.mode() == SetMode::kModule ? "module:{" : "{";
  for (std::size_t i = 0; i < phi.pieces().size(); ++i) {
    const Piece& piece = phi.pieces()[i];
    if (i > 0) out += "; ";
    out += FormatInterval(piece.span) + " -> " + FormatLeaf(piece.leaf);
  }
  return out + "}";
}

std::size_t FindPiece(const PiecewiseBF& phi, const Point& y) {
  const auto& pieces = phi.pieces();
  auto it = std::partition_point(pieces.begin(), pieces.end(),
                                 [&](const Piece& piece) {
                                   auto c = piece.span.hi() <=> y;
                                   return c < 0 ||
                                          (c == 0 && !piece.span.hi_closed());
                                 });
  if (it == pieces.end() || !it->span.Contains(y)) {
    throw Error(ErrorKind::kInternal, "point not covered by any piece");
  }
  return static_cast<std::size_t>(it - pieces.begin());
}

Point EvalBF(const RefinementSystem& sys, const PiecewiseBF& phi,
             const Point& y) {
  return LeafValue(sys, phi.pieces()[FindPiece(phi, y)].leaf, y);
}

ValueBound PieceSup(const RefinementSystem& sys, const Piece& piece) {
  const OrderInterval& s = piece.span;
  switch (piece.leaf.kind) {
    case Leaf::Kind::kConst:
      return {piece.leaf.value, true};
    case Leaf::Kind::kIdentity:
      return {s.hi(), s.hi_closed()};
    case Leaf::Kind::kIdentityMinus:
      if (s.hi_closed()) return {LeafValue(sys, piece.leaf, s.hi()), true};
      return {s.hi(), false};
  }
  return {};
}

ValueBound PieceInf(const RefinementSystem& sys, const Piece& piece) {
  const OrderInterval& s = piece.span;
  switch (piece.leaf.kind) {
    case Leaf::Kind::kConst:
      return {piece.leaf.value, true};
    case Leaf::Kind::kIdentity:
      return {s.lo(), s.lo_closed()};
    case Leaf::Kind::kIdentityMinus:
      if (s.lo_closed()) return {LeafValue(sys, piece.leaf, s.lo()), true};
      return {s.lo(), false};
  }
  return {};
}

PiecewiseBF BFMinus(const RefinementSystem& sys, const PiecewiseBF& phi) {
  std::vector<Piece> out = phi.pieces();
  for (Piece& piece : out) {
    switch (piece.leaf.kind) {
      case Leaf::Kind::kIdentity:
      case Leaf::Kind::kIdentityMinus:
        piece.leaf = Leaf::IdentityMinus();
        break;
      case Leaf::Kind::kConst:
        if (auto p = Predecessor(sys, piece.leaf.value)) piece.leaf.value = *p;
        break;
    }
  }
  return PiecewiseBF::Make(sys, std::move(out), phi.mode());
}

namespace {

// Appends the pieces of op(l1, l2) restricted to span.
void CombineLeaves(LatticeOp op, const RefinementSystem& sys,
                   const OrderInterval& span, const Leaf& l1, const Leaf& l2,
                   std::vector<Piece>& out) {
  using K = Leaf::Kind;
  const bool join = op == LatticeOp::kJoin;
  if (l1 == l2) {
    out.push_back({span, l1});
    return;
  }
  if (l1.kind != K::kConst && l2.kind != K::kConst) {
    // id- <= id everywhere.
    out.push_back({span, join ? Leaf::Identity() : Leaf::IdentityMinus()});
    return;
  }
  if (l1.kind == K::kConst && l2.kind == K::kConst) {
    const bool first_larger = l2.value < l1.value;
    out.push_back({span, (first_larger == join) ? l1 : l2});
    return;
  }
  const Leaf& constant = l1.kind == K::kConst ? l1 : l2;
  const Leaf& moving = l1.kind == K::kConst ? l2 : l1;
  // Below the threshold the moving leaf is <= c, above it is > c.
  Point threshold = constant.value;
  if (moving.kind == K::kIdentityMinus) {
    if (auto s = Successor(sys, threshold)) threshold = *s;
  }
  auto lower = Intersect(sys, span,
                         OrderInterval::Closed(sys, PMin(sys), threshold));
  std::optional<OrderInterval> upper;
  if (threshold != PMax(sys)) {
    upper = Intersect(
        sys, span, OrderInterval::Make(sys, threshold, false, PMax(sys), true));
  }
  if (lower) out.push_back({*lower, join ? constant : moving});
  if (upper) out.push_back({*upper, join ? moving : constant});
}

}  // namespace

PiecewiseBF BFLattice(LatticeOp op, const RefinementSystem& sys,
                      const PiecewiseBF& phi, const PiecewiseBF& psi) {
  if (phi.mode() != psi.mode()) {
    throw Error(ErrorKind::kMixedModes, "lattice operands differ in mode");
  }
  std::vector<Piece> out;
  const auto& a = phi.pieces();
  const auto& b = psi.pieces();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    auto common = Intersect(sys, a[i].span, b[j].span);
    if (common) CombineLeaves(op, sys, *common, a[i].leaf, b[j].leaf, out);
    // Advance whichever piece ends first.
    auto c = a[i].span.hi() <=> b[j].span.hi();
    if (c < 0 || (c == 0 && !a[i].span.hi_closed() && b[j].span.hi_closed())) {
      ++i;
    } else if (c > 0 ||
               (c == 0 && a[i].span.hi_closed() && !b[j].span.hi_closed())) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return PiecewiseBF::Make(sys, std::move(out), phi.mode());
}

bool BFLessEq(const RefinementSystem& sys, const PiecewiseBF& phi,
              const PiecewiseBF& psi) {
  return BFLattice(LatticeOp::kMeet, sys, phi, psi) == phi;
}

PiecewiseBF Overwrite(const RefinementSystem& sys, const PiecewiseBF& phi,
                      const OrderInterval& span, const Leaf& leaf) {
  std::vector<Piece> out;
  const Point lo_min = PMin(sys);
  const Point hi_max = PMax(sys);
  for (const Piece& piece : phi.pieces()) {
    // Part of the piece strictly left of span.
    if (span.lo() != lo_min || !span.lo_closed()) {
      auto left = Intersect(
          sys, piece.span,
          OrderInterval::Make(sys, lo_min, true, span.lo(), !span.lo_closed()));
      if (left) out.push_back({*left, piece.leaf});
    }
  }
  out.push_back({span, leaf});
  for (const Piece& piece : phi.pieces()) {
    if (span.hi() != hi_max || !span.hi_closed()) {
      auto right = Intersect(
          sys, piece.span,
          OrderInterval::Make(sys, span.hi(), !span.hi_closed(), hi_max, true));
      if (right) out.push_back({*right, piece.leaf});
    }
  }
  return PiecewiseBF::Make(sys, std::move(out), phi.mode());
}

bool LinkedCylinderBelow(const RefinementSystem& sys, const PiecewiseBF& phi,
                         const Word& a, const Word& b, CylinderTest test) {
  if (a.level() != b.level()) {
    throw Error(ErrorKind::kLevelMismatch, "linked cylinder words differ in level");
  }
  auto [bmin, bmax] = CylinderBounds(sys, b);
  const OrderInterval cyl = OrderInterval::Closed(sys, bmin, bmax);
  const auto word_order = a <=> b;
  for (const Piece& piece : phi.pieces()) {
    auto part = Intersect(sys, cyl, piece.span);
    if (!part) continue;
    bool ok = true;
    switch (piece.leaf.kind) {
      case Leaf::Kind::kConst: {
        Point c = piece.leaf.value;
        if (test == CylinderTest::kRaised) {
          if (auto s = Successor(sys, c)) c = *s;
        }
        const Point top = Splice(sys, a, part->hi());
        if (test == CylinderTest::kStrict && part->hi_closed()) {
          ok = top < c;
        } else {
          ok = top <= c;
        }
        break;
      }
      case Leaf::Kind::kIdentity:
        ok = word_order < 0 ||
             (word_order == 0 && test != CylinderTest::kStrict);
        break;
      case Leaf::Kind::kIdentityMinus:
        if (word_order < 0) {
          ok = true;
        } else if (word_order > 0) {
          ok = false;
        } else if (test == CylinderTest::kRaised) {
          ok = true;
        } else if (test == CylinderTest::kEta) {
          ok = part->IsSingleton() && !HasGapBelow(part->lo());
        } else {
          ok = false;
        }
        break;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace boundfn
