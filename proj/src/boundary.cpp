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

#include "boundfn/boundary.hpp"

#include <algorithm>
#include <set>

#include "boundfn/sample.hpp"

namespace boundfn {

Point Lowered(const RefinementSystem& sys, const Point& p) {
  auto q = Predecessor(sys, p);
  return q ? *q : p;
}

Point Raised(const RefinementSystem& sys, const Point& p) {
  auto q = Successor(sys, p);
  return q ? *q : p;
}

namespace {

bool BaseTest(SetMode mode, const Point& x, const Point& y) {
  return mode == SetMode::kIdeal ? PTest(x, y) : OrbitTest(x, y);
}

// Appends {span, leaf} when span is nonempty.
void PushSpan(const RefinementSystem& sys, std::vector<Piece>& out,
              const Point& lo, bool lo_closed, const Point& hi, bool hi_closed,
              const Leaf& leaf) {
  if (hi < lo) return;
  auto span = OrderInterval::TryMake(sys, lo, lo_closed, hi, hi_closed);
  if (span) out.push_back({*span, leaf});
}

PiecewiseBF FiniteBoundary(const RefinementSystem& sys, const MatrixUnitSet& s) {
  const bool ideal = s.mode == SetMode::kIdeal;
  std::vector<Piece> out;
  for (const Word& v : AllWords(sys, s.level)) {
    std::optional<Word> best;
    for (const auto& [u, w] : s.pairs) {
      if (w == v && (!best || *best < u)) best = u;
    }
    auto [lo, hi] = CylinderBounds(sys, v);
    Leaf leaf = Leaf::Const(PMin(sys));
    if (best) {
      if (ideal && !(*best < v)) {
        leaf = Leaf::Identity();
      } else {
        leaf = Leaf::Const(CylinderBounds(sys, *best).second);
      }
    }
    out.push_back({OrderInterval::Closed(sys, lo, hi), leaf});
  }
  return PiecewiseBF::Make(sys, std::move(out), s.mode);
}

}  // namespace

PiecewiseBF BoundaryOf(const RefinementSystem& sys, const IdealExpr& sigma) {
  using K = IdealExpr::Kind;
  const SetMode mode = sigma.mode;
  const bool ideal = mode == SetMode::kIdeal;
  const Point pmin = PMin(sys);
  const Point pmax = PMax(sys);
  switch (sigma.kind) {
    case K::kEmpty:
      return PiecewiseBF::Constant(sys, pmin, mode);
    case K::kFull:
      return ideal ? PiecewiseBF::Identity(sys, mode)
                   : PiecewiseBF::Constant(sys, pmax, mode);
    case K::kFiniteLevel:
      return FiniteBoundary(sys, *sigma.finite);
    case K::kStrip:
    case K::kStripPlus: {
      const Point& a = sigma.a;
      const Point& b = sigma.b;
      const Leaf middle = Leaf::Const(Lowered(sys, a));
      std::vector<Piece> out;
      if (ideal) {
        if (b < a) return PiecewiseBF::Identity(sys, mode);
        PushSpan(sys, out, pmin, true, a, false, Leaf::Identity());
        PushSpan(sys, out, a, true, b, true, middle);
        PushSpan(sys, out, b, false, pmax, true, Leaf::Identity());
      } else {
        PushSpan(sys, out, pmin, true, b, true, middle);
        PushSpan(sys, out, b, false, pmax, true, Leaf::Const(pmax));
      }
      PiecewiseBF phi = PiecewiseBF::Make(sys, std::move(out), mode);
      if (sigma.kind == K::kStripPlus) {
        phi = Overwrite(sys, phi, OrderInterval::Closed(sys, b, b),
                        Leaf::Const(a));
      }
      return phi;
    }
    case K::kCorner: {
      std::vector<Piece> out;
      PushSpan(sys, out, pmin, true, sigma.t(), true, Leaf::Const(pmin));
      PushSpan(sys, out, sigma.t(), false, pmax, true,
               Leaf::Const(Lowered(sys, sigma.a)));
      return PiecewiseBF::Make(sys, std::move(out), mode);
    }
    case K::kOfBFClosed:
      return *sigma.phi;
    case K::kOfBFOpen:
      return BFMinus(sys, *sigma.phi);
    case K::kUnion:
    case K::kIntersection: {
      const bool is_union = sigma.kind == K::kUnion;
      if (sigma.parts.empty()) {
        return BoundaryOf(sys, is_union ? IdealExpr::Empty(mode)
                                        : IdealExpr::Full(mode));
      }
      PiecewiseBF acc = BoundaryOf(sys, sigma.parts.front());
      for (std::size_t i = 1; i < sigma.parts.size(); ++i) {
        acc = BFLattice(is_union ? LatticeOp::kJoin : LatticeOp::kMeet, sys,
                        acc, BoundaryOf(sys, sigma.parts[i]));
      }
      return acc;
    }
  }
  throw Error(ErrorKind::kInternal, "unhandled ideal expression");
}

namespace {

class BFValidator {
 public:
  BFValidator(const RefinementSystem& sys, const PiecewiseBF& phi,
              const SampleOptions& options)
      : sys_(sys),
        phi_(phi),
        options_(options),
        ideal_(phi.mode() == SetMode::kIdeal) {}

  std::vector<Violation> Run() {
    const auto& pieces = phi_.pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      CheckPiece(i);
    }
    if (out_.empty()) Sample();
    return out_;
  }

 private:
  void Add(const std::string& kind, const std::string& detail) {
    out_.push_back({kind, detail});
  }

  // Property 2c at y with phi(y) = value: later pieces take larger values.
  void CheckStrictAfter(std::size_t i, const Point& y, const Point& value) {
    const auto& pieces = phi_.pieces();
    if (i + 1 >= pieces.size()) return;
    const ValueBound inf = PieceInf(sys_, pieces[i + 1]);
    const bool ok = inf.attained ? value < inf.value : value <= inf.value;
    if (!ok) {
      Add("Property2cViolation",
          "phi(" + FormatPoint(y) + ") = " + FormatPoint(value) +
              " is not below the values to its right");
    }
  }

  // Property 2d: a G-set neighbourhood of (value, y) lies below the graph.
  void CheckNeighbourhood(const Point& y, const Point& value) {
    Verdict v = LinkedCylinderSearch(sys_, phi_, value, y, CylinderTest::kEta,
                                     options_.depth_cap);
    if (v.no()) {
      Add("Property2dViolation", "no neighbourhood of (" + FormatPoint(value) +
                                     ", " + FormatPoint(y) +
                                     ") lies below the graph");
    } else if (v.unknown()) {
      Add("Undecided", "property 2d search at " + FormatPoint(y) +
                           " reached depth " + std::to_string(v.depth));
    }
  }

  void CheckPiece(std::size_t i) {
    const auto& pieces = phi_.pieces();
    const Piece& piece = pieces[i];
    const OrderInterval& span = piece.span;
    const bool is_const = piece.leaf.kind == Leaf::Kind::kConst;
    const bool is_id = piece.leaf.kind == Leaf::Kind::kIdentity;

    if (ideal_ && is_const && span.lo() < piece.leaf.value) {
      Add("Property1Violation", "const(" + FormatPoint(piece.leaf.value) +
                                    ") exceeds y at " + FormatPoint(span.lo()));
    }

    if (i + 1 < pieces.size()) {
      const ValueBound sup = PieceSup(sys_, piece);
      const ValueBound inf = PieceInf(sys_, pieces[i + 1]);
      if (inf.value < sup.value) {
        Add("Property3Violation", "values on " + FormatInterval(span) +
                                      " exceed values on " +
                                      FormatInterval(pieces[i + 1].span));
      }
    }

    if (is_const && HasGapBelow(piece.leaf.value)) {
      const Point& c = piece.leaf.value;
      if (!span.IsSingleton() || !HasGapBelow(span.lo())) {
        Add("Property2bViolation",
            "value " + FormatPoint(c) + " has a gap below on " +
                FormatInterval(span) + ", which holds points without one");
      } else {
        const Point& y = span.lo();
        if (!BaseTest(phi_.mode(), c, y)) {
          Add("Property2aViolation",
              "(" + FormatPoint(c) + ", " + FormatPoint(y) + ") is not in " +
                  (ideal_ ? "P" : "G"));
        } else {
          CheckNeighbourhood(y, c);
        }
        CheckStrictAfter(i, y, c);
      }
    }

    if (is_id) {
      if (span.hi_closed() && HasGapBelow(span.hi())) {
        CheckStrictAfter(i, span.hi(), span.hi());
        CheckNeighbourhood(span.hi(), span.hi());
      }
      if (span.lo_closed() && HasGapBelow(span.lo()) &&
          !(span.lo() == span.hi())) {
        CheckNeighbourhood(span.lo(), span.lo());
      }
    }

    if (span.lo_closed() && !HasGapBelow(span.lo())) {
      const Point value = LeafValue(sys_, piece.leaf, span.lo());
      if (i == 0) {
        if (ideal_ && value != PMin(sys_)) {
          Add("Property4Violation", "phi(p_min) must be p_min");
        }
      } else {
        const Point left = PieceSup(sys_, pieces[i - 1]).value;
        if (value != left) {
          Add("Property4Violation",
              "phi(" + FormatPoint(span.lo()) + ") = " + FormatPoint(value) +
                  " differs from the limit " + FormatPoint(left) +
                  " from the left");
        }
      }
    }
  }

  void Sample() {
    std::vector<Point> anchors;
    for (const Piece& piece : phi_.pieces()) {
      anchors.push_back(piece.span.lo());
      anchors.push_back(piece.span.hi());
      if (piece.leaf.kind == Leaf::Kind::kConst) {
        anchors.push_back(piece.leaf.value);
      }
    }
    PointSampler sampler(sys_, options_.seed, anchors);
    for (std::size_t k = 0; k < options_.samples && out_.empty(); ++k) {
      const Point y = sampler.Random();
      const Point z = sampler.Random();
      const Point fy = EvalBF(sys_, phi_, y);
      const Point fz = EvalBF(sys_, phi_, z);
      if (ideal_ && y < fy) {
        Add("Property1Violation", "sampled at " + FormatPoint(y));
      }
      if (y < z && fz < fy) {
        Add("Property3Violation",
            "sampled at " + FormatPoint(y) + " < " + FormatPoint(z));
      }
      if (HasGapBelow(fy)) {
        if (!BaseTest(phi_.mode(), fy, y)) {
          Add("Property2aViolation", "sampled at " + FormatPoint(y));
        }
        if (!HasGapBelow(y)) {
          Add("Property2bViolation", "sampled at " + FormatPoint(y));
        }
        if (y < z && !(fy < fz)) {
          Add("Property2cViolation",
              "sampled at " + FormatPoint(y) + " < " + FormatPoint(z));
        }
      }
    }
  }

  const RefinementSystem& sys_;
  const PiecewiseBF& phi_;
  const SampleOptions& options_;
  const bool ideal_;
  std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> ValidateBF(const RefinementSystem& sys,
                                  const PiecewiseBF& phi,
                                  const SampleOptions& options) {
  return BFValidator(sys, phi, options).Run();
}

PiecewiseBF MakeValidated(const RefinementSystem& sys, std::vector<Piece> pieces,
                          SetMode mode) {
  PiecewiseBF phi = PiecewiseBF::Make(sys, std::move(pieces), mode);
  auto violations = ValidateBF(sys, phi);
  if (!violations.empty()) {
    throw Error(ErrorKind::kConstraint, "not a boundary function: " +
                                            violations.front().kind + ": " +
                                            violations.front().detail);
  }
  return phi;
}

ModificationResult IsPointOfModification(const RefinementSystem& sys,
                                         const PiecewiseBF& phi,
                                         const Point& y,
                                         std::size_t depth_cap) {
  if (!HasGapBelow(y)) return {Verdict::No("y has no gap below"), {}};
  const Point value = EvalBF(sys, phi, y);
  auto up = Successor(sys, value);
  if (!up) return {Verdict::No("phi(y) has no gap above"), {}};
  Verdict v =
      LinkedCylinderSearch(sys, phi, *up, y, CylinderTest::kRaised, depth_cap);
  if (!v.yes()) return {v, {}};
  const std::size_t m = v.level.value_or(0);
  return {v, ModificationCertificate{y, Prefix(*up, m), Prefix(y, m)}};
}

PiecewiseBF BFPlus(const RefinementSystem& sys, const PiecewiseBF& phi,
                   std::size_t depth_cap) {
  auto modifies = [&](const Point& y) {
    Verdict v = IsPointOfModification(sys, phi, y, depth_cap).verdict;
    if (v.unknown()) {
      throw Error(ErrorKind::kDepthExceeded,
                  "point-of-modification search undecided at " +
                      FormatPoint(y));
    }
    return v.yes();
  };
  std::vector<Piece> out;
  for (const Piece& piece : phi.pieces()) {
    const OrderInterval& s = piece.span;
    if (piece.leaf.kind == Leaf::Kind::kConst &&
        HasGapAbove(sys, piece.leaf.value) && s.hi_closed() &&
        HasGapBelow(s.hi()) && modifies(s.hi())) {
      PushSpan(sys, out, s.lo(), s.lo_closed(), s.hi(), false, piece.leaf);
      out.push_back({OrderInterval::Closed(sys, s.hi(), s.hi()),
                     Leaf::Const(*Successor(sys, piece.leaf.value))});
    } else if (piece.leaf.kind == Leaf::Kind::kIdentityMinus) {
      // Every interior point with a gap below is a point of modification,
      // so only the closed endpoints need a test.
      auto endpoint = [&](const Point& p) {
        const bool keep = HasGapBelow(p) && !modifies(p);
        return keep ? Leaf::Const(*Predecessor(sys, p)) : Leaf::Identity();
      };
      if (s.lo_closed()) {
        out.push_back({OrderInterval::Closed(sys, s.lo(), s.lo()),
                       endpoint(s.lo())});
      }
      if (s.lo() != s.hi()) {
        PushSpan(sys, out, s.lo(), false, s.hi(), false, Leaf::Identity());
        if (s.hi_closed()) {
          out.push_back({OrderInterval::Closed(sys, s.hi(), s.hi()),
                         endpoint(s.hi())});
        }
      }
    } else {
      out.push_back(piece);
    }
  }
  return PiecewiseBF::Make(sys, std::move(out), phi.mode());
}

IdealExpr SigmaOpen(const PiecewiseBF& phi) { return IdealExpr::OfBFOpen(phi); }
IdealExpr SigmaClosed(const PiecewiseBF& phi) {
  return IdealExpr::OfBFClosed(phi);
}

Verdict InBPhi(const RefinementSystem& sys, const PiecewiseBF& phi,
               const Point& y, std::size_t depth_cap) {
  return SigmaClosedMember(sys, phi, EvalBF(sys, phi, y), y, depth_cap);
}

Verdict InLPhi(const RefinementSystem& sys, const PiecewiseBF& phi,
               const Point& y, std::size_t depth_cap) {
  if (!HasGapBelow(EvalBF(sys, phi, y))) {
    return Verdict::No("phi(y) has no gap below");
  }
  return InBPhi(sys, phi, y, depth_cap);
}

Verdict SandwichCheck(const RefinementSystem& sys, const IdealExpr& sigma,
                      const PiecewiseBF& phi, const SampleOptions& options) {
  const PiecewiseBF actual = BoundaryOf(sys, sigma);
  const bool direct = actual == phi;

  // Sampled inclusions sigma(phi) u L_phi <= sigma <= sigma[phi].
  std::string failure;
  std::vector<Point> anchors = AnchorPoints(sys, sigma);
  for (const Piece& piece : phi.pieces()) {
    anchors.push_back(piece.span.lo());
    anchors.push_back(piece.span.hi());
  }
  PointSampler sampler(sys, options.seed, anchors);
  const IdealExpr open = SigmaOpen(phi);
  for (std::size_t k = 0; k < options.samples && failure.empty(); ++k) {
    const Point y = sampler.Random();
    const Point x = sampler.Below(2) == 0 ? sampler.InOrbitBelow(y)
                                          : sampler.InOrbitAbove(y);
    const Verdict in_sigma = Member(sys, sigma, x, y, options.depth_cap);
    if (Member(sys, open, x, y).yes() && in_sigma.no()) {
      failure = "sigma(phi) not inside sigma at (" + FormatPoint(x) + ", " +
                FormatPoint(y) + ")";
    } else if (in_sigma.yes() &&
               SigmaClosedMember(sys, phi, x, y, options.depth_cap).no()) {
      failure = "sigma not inside sigma[phi] at (" + FormatPoint(x) + ", " +
                FormatPoint(y) + ")";
    }
  }
  for (const Point& y : anchors) {
    if (!failure.empty()) break;
    if (InLPhi(sys, phi, y, options.depth_cap).yes() &&
        Member(sys, sigma, EvalBF(sys, phi, y), y, options.depth_cap).no()) {
      failure = "L_phi point (" + FormatPoint(EvalBF(sys, phi, y)) + ", " +
                FormatPoint(y) + ") not in sigma";
    }
  }
  if (direct && !failure.empty()) {
    throw Error(ErrorKind::kInternal,
                "boundary matches but inclusion test failed: " + failure);
  }
  if (direct) return Verdict::Yes();
  std::string reason = "boundary of sigma is " + FormatBF(actual);
  if (!failure.empty()) reason += "; " + failure;
  return Verdict::No(reason);
}

bool BFEquiv(const RefinementSystem& sys, const PiecewiseBF& phi,
             const PiecewiseBF& psi) {
  return BFMinus(sys, phi) == BFMinus(sys, psi);
}

bool BFBetween(const RefinementSystem& sys, const PiecewiseBF& phi,
               const PiecewiseBF& psi, std::size_t depth_cap) {
  return BFLessEq(sys, BFMinus(sys, phi), psi) &&
         BFLessEq(sys, psi, BFPlus(sys, phi, depth_cap));
}

}  // namespace boundfn
