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

#include "boundfn/irreducible.hpp"

#include <algorithm>

#include "boundfn/sample.hpp"

namespace boundfn {

const char* FormTagName(FormTag tag) {
  switch (tag) {
    case FormTag::kIdentityForm: return "IdentityForm";
    case FormTag::kMinimalForm: return "MinimalForm";
    case FormTag::kPhiAB: return "PhiAB";
    case FormTag::kPsiPaab: return "PsiPaab";
    case FormTag::kPhiAT: return "PhiAT";
    case FormTag::kOther: return "Other";
  }
  return "?";
}

const char* CardinalityName(Cardinality c) {
  switch (c) {
    case Cardinality::kOne: return "1";
    case Cardinality::kTwo: return "2";
    case Cardinality::kMore: return ">2";
  }
  return "?";
}

const char* IdealClassName(IdealClass c) {
  switch (c) {
    case IdealClass::kIrreducible: return "Irreducible";
    case IdealClass::kReducible: return "Reducible";
    case IdealClass::kNotInCatalog: return "NotInCatalog";
  }
  return "?";
}

namespace {

using Filter = PointSetPart::Filter;

bool Passes(const RefinementSystem& sys, Filter filter, const Point& p) {
  switch (filter) {
    case Filter::kAll: return true;
    case Filter::kNoGapBelow: return !HasGapBelow(p);
    case Filter::kGapBelowOnly: return HasGapBelow(p);
    case Filter::kPredOfGapBelow: return HasGapAbove(sys, p);
  }
  return false;
}

bool IsFiniteSpan(const RefinementSystem& sys, const OrderInterval& span) {
  return span.IsSingleton() || span.IsGapPair(sys);
}

// Points of a part whose span is a singleton or a gap pair.
std::vector<Point> FinitePart(const RefinementSystem& sys,
                              const PointSetPart& part) {
  std::vector<Point> span_points = {part.span.lo()};
  if (!part.span.IsSingleton()) span_points.push_back(part.span.hi());
  std::vector<Point> out;
  for (const Point& p : span_points) {
    if (part.filter == Filter::kPredOfGapBelow) {
      if (HasGapBelow(p)) out.push_back(*Predecessor(sys, p));
    } else if (Passes(sys, part.filter, p)) {
      out.push_back(p);
    }
  }
  return out;
}

void SortUnique(std::vector<Point>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

void SortParts(std::vector<PointSetPart>& parts) {
  std::stable_sort(parts.begin(), parts.end(),
                   [](const PointSetPart& l, const PointSetPart& r) {
                     return l.span.lo() < r.span.lo();
                   });
}

std::optional<PiecewiseBF> TryFamily(const RefinementSystem& sys,
                                     FamilyKind kind, const Point& a,
                                     const Point& b) {
  try {
    return ConstructBFFamily(sys, kind, a, b);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// First constant value that lies strictly below some point of its span.
std::optional<Point> FirstDropValue(const PiecewiseBF& phi) {
  for (const Piece& piece : phi.pieces()) {
    if (piece.leaf.kind == Leaf::Kind::kConst && piece.leaf.value < piece.span.hi()) {
      return piece.leaf.value;
    }
  }
  return std::nullopt;
}

[[noreturn]] void WitnessFailure(const std::string& what) {
  throw Error(ErrorKind::kInternal, "irreducibility witness failed: " + what);
}

}  // namespace

NormalizedBF NormalizeBF(const RefinementSystem& sys, const PiecewiseBF& phi) {
  NormalizedBF out{phi, FormTag::kOther, std::nullopt, std::nullopt};
  if (phi == PiecewiseBF::Identity(sys, phi.mode())) {
    out.tag = FormTag::kIdentityForm;
    return out;
  }
  const Point pmin = PMin(sys);
  if (phi == PiecewiseBF::Constant(sys, pmin, phi.mode())) {
    out.tag = FormTag::kMinimalForm;
    return out;
  }
  if (phi.mode() != SetMode::kIdeal) return out;
  const auto& pieces = phi.pieces();
  if (pieces.size() == 2 && pieces[0].leaf == Leaf::Const(pmin) &&
      pieces[1].leaf.kind == Leaf::Kind::kConst) {
    const Point& a = pieces[1].leaf.value;
    const Point t = SupAtMost(sys, phi, pmin);
    auto cand = TryFamily(sys, FamilyKind::kPhiAT, a, t);
    if (cand && *cand == phi) {
      out.tag = FormTag::kPhiAT;
      out.a = a;
      out.b = t;
      return out;
    }
  }
  auto drop = FirstDropValue(phi);
  if (!drop) return out;
  {
    const Point b = SupAtMost(sys, phi, *drop);
    auto cand = TryFamily(sys, FamilyKind::kPhiAB, *drop, b);
    if (cand && *cand == phi) {
      out.tag = FormTag::kPhiAB;
      out.a = *drop;
      out.b = b;
      return out;
    }
  }
  if (auto a = Successor(sys, *drop)) {
    const Point b = SupAtMost(sys, phi, *a);
    auto cand = TryFamily(sys, FamilyKind::kPsiPaab, *a, b);
    if (cand && *cand == phi) {
      out.tag = FormTag::kPsiPaab;
      out.a = *a;
      out.b = b;
    }
  }
  return out;
}

Cardinality PointSetDescriptor::Size(const RefinementSystem& sys) const {
  auto points = FinitePoints(sys);
  if (!points || points->size() > 2) return Cardinality::kMore;
  return points->size() == 2 ? Cardinality::kTwo : Cardinality::kOne;
}

std::optional<std::vector<Point>> PointSetDescriptor::FinitePoints(
    const RefinementSystem& sys) const {
  std::vector<Point> out;
  for (const PointSetPart& part : parts) {
    if (!IsFiniteSpan(sys, part.span)) return std::nullopt;
    for (Point& p : FinitePart(sys, part)) out.push_back(std::move(p));
  }
  SortUnique(out);
  return out;
}

std::vector<Point> PointSetDescriptor::Representatives(
    const RefinementSystem& sys) const {
  std::vector<Point> out;
  for (const PointSetPart& part : parts) {
    if (IsFiniteSpan(sys, part.span)) {
      for (Point& p : FinitePart(sys, part)) out.push_back(std::move(p));
      continue;
    }
    const bool gap_points = part.filter == Filter::kGapBelowOnly ||
                            part.filter == Filter::kPredOfGapBelow;
    // All-minimal tails give points with a gap below; the generic tail
    // gives points with no gap at all.
    const Point tail = gap_points ? PMin(sys) : GenericTail();
    auto first = PointBetween(sys, part.span.lo(), part.span.hi(), tail);
    if (!first) continue;
    auto second = PointBetween(sys, *first, part.span.hi(), tail);
    for (const auto& p : {first, second}) {
      if (!p) continue;
      out.push_back(part.filter == Filter::kPredOfGapBelow
                        ? *Predecessor(sys, *p)
                        : *p);
    }
  }
  SortUnique(out);
  return out;
}

bool PointSetDescriptor::Contains(const RefinementSystem& sys,
                                  const Point& p) const {
  for (const PointSetPart& part : parts) {
    if (part.filter == Filter::kPredOfGapBelow) {
      auto s = Successor(sys, p);
      if (s && part.span.Contains(*s)) return true;
    } else if (part.span.Contains(p) && Passes(sys, part.filter, p)) {
      return true;
    }
  }
  return false;
}

RangeAndDropResult RangeAndDrop(const RefinementSystem& sys,
                                const PiecewiseBF& phi) {
  RangeAndDropResult out;
  const Point pmax = PMax(sys);
  for (const Piece& piece : phi.pieces()) {
    const OrderInterval& span = piece.span;
    switch (piece.leaf.kind) {
      case Leaf::Kind::kIdentity:
        out.range.parts.push_back({span, Filter::kAll});
        break;
      case Leaf::Kind::kIdentityMinus:
        out.range.parts.push_back({span, Filter::kNoGapBelow});
        if (span.lo_closed() && HasGapBelow(span.lo())) {
          const Point p = *Predecessor(sys, span.lo());
          out.range.parts.push_back({OrderInterval::Closed(sys, p, p), Filter::kAll});
        }
        out.drop_set.parts.push_back({span, Filter::kGapBelowOnly});
        out.drop_range.parts.push_back({span, Filter::kPredOfGapBelow});
        break;
      case Leaf::Kind::kConst: {
        const Point& c = piece.leaf.value;
        out.range.parts.push_back({OrderInterval::Closed(sys, c, c), Filter::kAll});
        auto above = OrderInterval::TryMake(sys, c, false, pmax, true);
        auto dropped = above ? Intersect(sys, span, *above) : std::nullopt;
        if (dropped) {
          out.drop_set.parts.push_back({*dropped, Filter::kAll});
          out.drop_range.parts.push_back({OrderInterval::Closed(sys, c, c), Filter::kAll});
        }
        break;
      }
    }
  }
  SortParts(out.range.parts);
  SortParts(out.drop_set.parts);
  SortParts(out.drop_range.parts);
  return out;
}

Point SupAtMost(const RefinementSystem& sys, const PiecewiseBF& phi,
                const Point& c) {
  std::optional<Point> best;
  auto offer = [&](const Point& p) {
    if (!best || *best < p) best = p;
  };
  for (const Piece& piece : phi.pieces()) {
    const OrderInterval& span = piece.span;
    switch (piece.leaf.kind) {
      case Leaf::Kind::kConst:
        if (piece.leaf.value <= c) offer(span.hi());
        break;
      case Leaf::Kind::kIdentity:
      case Leaf::Kind::kIdentityMinus: {
        // y^- <= c exactly when y <= c, or y = suc c.
        const Point bound = piece.leaf.kind == Leaf::Kind::kIdentity
                                ? c
                                : Raised(sys, c);
        if (span.lo() < bound || (span.lo() == bound && span.lo_closed())) {
          offer(std::min(span.hi(), bound));
        }
        break;
      }
    }
  }
  return best ? *best : PMin(sys);
}

std::optional<std::string> CheckWitnesses(const RefinementSystem& sys,
                                          const PiecewiseBF& phi,
                                          LatticeOp op, const PiecewiseBF& psi1,
                                          const PiecewiseBF& psi2) {
  const bool meet = op == LatticeOp::kMeet;
  int i = 1;
  for (const PiecewiseBF* psi : {&psi1, &psi2}) {
    const std::string name = "psi" + std::to_string(i++);
    auto v = ValidateBF(sys, *psi);
    if (!v.empty()) {
      return name + " is not a boundary function (" + v[0].kind + ": " +
             v[0].detail + ")";
    }
    if (*psi == phi) return name + " equals phi";
    if (meet ? !BFLessEq(sys, phi, *psi) : !BFLessEq(sys, *psi, phi)) {
      return name + (meet ? " is not above phi" : " is not below phi");
    }
  }
  if (BFLattice(op, sys, psi1, psi2) != phi) {
    return std::string("psi1 ") + (meet ? "meet" : "join") +
           " psi2 differs from phi";
  }
  return std::nullopt;
}

BFClass ClassifyMeetBF(const RefinementSystem& sys, const PiecewiseBF& phi) {
  if (phi.mode() != SetMode::kIdeal) {
    throw Error(ErrorKind::kConstraint,
                "irreducibility is classified for ideal sets only");
  }
  const NormalizedBF norm = NormalizeBF(sys, phi);
  const PointSetDescriptor rd = RangeAndDrop(sys, phi).drop_range;
  BFClass out;
  auto expect_form = [&](FormTag tag) {
    if (norm.tag != tag) {
      WitnessFailure(std::string("drop range suggests ") + FormTagName(tag) +
                     " but the normal form is " + FormTagName(norm.tag));
    }
    out.irreducible = true;
    out.form = tag;
    out.a = norm.a;
    out.b = norm.b;
    return out;
  };
  if (rd.empty()) return expect_form(FormTag::kIdentityForm);
  auto finite = rd.FinitePoints(sys);
  if (finite && finite->size() == 1) {
    // The constant p_min function is phi_ab with a = p_min and b = p_max.
    if (norm.tag == FormTag::kMinimalForm) {
      out.irreducible = true;
      out.form = FormTag::kPhiAB;
      out.a = PMin(sys);
      out.b = PMax(sys);
      return out;
    }
    return expect_form(FormTag::kPhiAB);
  }
  if (finite && finite->size() == 2 && Successor(sys, (*finite)[0]) == (*finite)[1]) {
    return expect_form(FormTag::kPsiPaab);
  }

  // Two drop values with a point b between them that has no gap below.
  std::vector<Point> reps = rd.Representatives(sys);
  std::optional<Point> b;
  for (std::size_t i = 0; i + 1 < reps.size() && !b; ++i) {
    b = PointBetween(sys, reps[i], reps[i + 1], GenericTail());
  }
  if (!b) WitnessFailure("no point between two drop values");
  const Point pmin = PMin(sys);
  const Point pmax = PMax(sys);
  std::vector<Piece> eta_pieces = {
      {OrderInterval::Closed(sys, pmin, *b), Leaf::Identity()}};
  if (*b < pmax) {
    eta_pieces.push_back(
        {OrderInterval::Make(sys, *b, false, pmax, true), Leaf::Const(*b)});
  }
  const PiecewiseBF eta = PiecewiseBF::Make(sys, std::move(eta_pieces));
  PiecewiseBF psi1 = BFLattice(LatticeOp::kJoin, sys, phi, eta);
  const Point t = SupAtMost(sys, phi, *b);
  auto upper = OrderInterval::TryMake(sys, t, false, pmax, true);
  if (!upper) WitnessFailure("phi stays at or below " + FormatPoint(*b));
  PiecewiseBF psi2 = Overwrite(sys, phi, *upper, Leaf::Identity());
  if (auto err = CheckWitnesses(sys, phi, LatticeOp::kMeet, psi1, psi2)) {
    WitnessFailure(*err);
  }
  out.psi1 = std::move(psi1);
  out.psi2 = std::move(psi2);
  return out;
}

BFClass ClassifyJoinBF(const RefinementSystem& sys, const PiecewiseBF& phi) {
  if (phi.mode() != SetMode::kIdeal) {
    throw Error(ErrorKind::kConstraint,
                "irreducibility is classified for ideal sets only");
  }
  const NormalizedBF norm = NormalizeBF(sys, phi);
  const PointSetDescriptor ran = RangeAndDrop(sys, phi).range;
  const Point pmin = PMin(sys);
  BFClass out;
  auto expect_form = [&](FormTag tag) {
    if (norm.tag != tag) {
      WitnessFailure(std::string("range suggests ") + FormTagName(tag) +
                     " but the normal form is " + FormTagName(norm.tag));
    }
    out.irreducible = true;
    out.form = tag;
    out.a = norm.a;
    out.b = norm.b;
    return out;
  };
  switch (ran.Size(sys)) {
    case Cardinality::kOne: return expect_form(FormTag::kMinimalForm);
    case Cardinality::kTwo: return expect_form(FormTag::kPhiAT);
    case Cardinality::kMore: break;
  }

  // A point c with no gap below and range values on both sides, both above
  // p_min.
  std::vector<Point> reps = ran.Representatives(sys);
  std::erase(reps, pmin);
  std::optional<Point> c;
  for (std::size_t i = 0; i + 1 < reps.size() && !c; ++i) {
    c = PointBetween(sys, reps[i], reps[i + 1], GenericTail());
  }
  if (!c) WitnessFailure("no point between two range values");
  const Point s_sup = SupAtMost(sys, phi, *c);
  const bool closed = EvalBF(sys, phi, s_sup) <= *c;
  const OrderInterval lower = OrderInterval::Make(sys, pmin, true, s_sup, closed);
  auto upper = OrderInterval::TryMake(sys, s_sup, !closed, PMax(sys), true);
  if (!upper) WitnessFailure("phi stays at or below " + FormatPoint(*c));
  PiecewiseBF psi1 = Overwrite(sys, phi, *upper, Leaf::Const(*c));
  PiecewiseBF psi2 = Overwrite(sys, phi, lower, Leaf::Const(pmin));
  if (auto err = CheckWitnesses(sys, phi, LatticeOp::kJoin, psi1, psi2)) {
    WitnessFailure(*err);
  }
  out.psi1 = std::move(psi1);
  out.psi2 = std::move(psi2);
  return out;
}

IdealClassification ClassifyMeetIdeal(const RefinementSystem& sys,
                                      const IdealExpr& sigma) {
  using K = IdealExpr::Kind;
  IdealClassification out;
  if ((sigma.kind != K::kStrip && sigma.kind != K::kStripPlus) ||
      sigma.mode != SetMode::kIdeal || sigma.b < sigma.a) {
    return out;
  }
  const Point& a = sigma.a;
  const Point& b = sigma.b;
  out.boundary = BoundaryOf(sys, sigma);
  out.boundary_irreducible = ClassifyMeetBF(sys, *out.boundary).irreducible;
  const bool in_p = PTest(a, b);
  const bool gaps = HasGapAbove(sys, a) && HasGapBelow(b);
  const bool reducible = sigma.kind == K::kStrip ? (!in_p && gaps) : gaps;
  if (!reducible) {
    out.verdict = IdealClass::kIrreducible;
    return out;
  }
  out.verdict = IdealClass::kReducible;
  // The pair (a, b) is the only difference between the two strips below and
  // their intersection, and it is absent from sigma exactly when sigma is a
  // plain strip.
  out.decomposition.push_back(IdealExpr::Strip(*Successor(sys, a), b));
  out.decomposition.push_back(IdealExpr::Strip(a, *Predecessor(sys, b)));
  return out;
}

IdealClassification ClassifyJoinIdeal(const RefinementSystem& sys,
                                      const IdealExpr& sigma) {
  using K = IdealExpr::Kind;
  IdealClassification out;
  if (sigma.mode != SetMode::kIdeal) return out;
  if (sigma.kind == K::kEmpty) {
    out.verdict = IdealClass::kIrreducible;
    out.boundary = BoundaryOf(sys, sigma);
    out.boundary_irreducible = true;
    return out;
  }
  if (sigma.kind != K::kCorner) return out;
  const Point& a = sigma.a;
  const Point& t = sigma.t();
  out.boundary = BoundaryOf(sys, sigma);
  out.boundary_irreducible = ClassifyJoinBF(sys, *out.boundary).irreducible;
  if (HasGapBelow(a) && HasGapAbove(sys, t)) {
    const Point pa = *Predecessor(sys, a);
    const Point st = *Successor(sys, t);
    if (!PTest(pa, st)) {
      out.verdict = IdealClass::kReducible;
      out.decomposition.push_back(IdealExpr::Corner(sys, a, st));
      out.decomposition.push_back(IdealExpr::Corner(sys, pa, t));
      return out;
    }
  }
  out.verdict = IdealClass::kIrreducible;
  return out;
}

std::optional<std::size_t> CheckDecomposition(const RefinementSystem& sys,
                                              const IdealExpr& sigma,
                                              CombineOp op,
                                              const std::vector<IdealExpr>& parts,
                                              const SampleOptions& options) {
  std::vector<Point> anchors = AnchorPoints(sys, sigma);
  for (const IdealExpr& part : parts) {
    for (Point& p : AnchorPoints(sys, part)) anchors.push_back(std::move(p));
  }
  anchors.push_back(PMin(sys));
  anchors.push_back(PMax(sys));
  SortUnique(anchors);
  PointSampler sampler(sys, options.seed, anchors);

  // The sets differ from their parts along single rows and columns through
  // the anchors, so every anchor also gets partners from its own orbit.
  std::vector<std::pair<Point, Point>> pairs;
  for (const Point& x : anchors) {
    for (const Point& y : anchors) {
      if (PTest(x, y)) pairs.emplace_back(x, y);
    }
    for (int k = 0; k < 4; ++k) {
      pairs.emplace_back(sampler.InOrbitBelow(x), x);
      pairs.emplace_back(x, sampler.InOrbitAbove(x));
    }
  }
  const std::size_t target = pairs.size() + options.samples;
  while (pairs.size() < target) {
    const Point y = sampler.Random();
    if (sampler.Below(2) == 0) {
      pairs.emplace_back(sampler.InOrbitBelow(y), y);
    } else {
      pairs.emplace_back(y, sampler.InOrbitAbove(y));
    }
  }

  std::size_t mismatches = 0;
  std::vector<bool> differs(parts.size(), false);
  for (const auto& [x, y] : pairs) {
    const Verdict whole = Member(sys, sigma, x, y, options.depth_cap);
    bool combined = op == CombineOp::kIntersection;
    bool unknown = whole.unknown();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Verdict v = Member(sys, parts[i], x, y, options.depth_cap);
      unknown = unknown || v.unknown();
      if (v.yes() != whole.yes()) differs[i] = true;
      combined = op == CombineOp::kUnion ? (combined || v.yes())
                                         : (combined && v.yes());
    }
    if (unknown || combined != whole.yes()) ++mismatches;
  }
  if (std::find(differs.begin(), differs.end(), false) != differs.end()) {
    return std::nullopt;
  }
  return mismatches;
}

std::optional<FamilyKind> ParseFamilyKind(const std::string& name) {
  for (FamilyKind k : {FamilyKind::kStrip, FamilyKind::kStripPlus,
                       FamilyKind::kCorner, FamilyKind::kPhiAB,
                       FamilyKind::kPsiPaab, FamilyKind::kPhiAT}) {
    if (name == FamilyKindName(k)) return k;
  }
  return std::nullopt;
}

const char* FamilyKindName(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kStrip: return "strip";
    case FamilyKind::kStripPlus: return "strip_plus";
    case FamilyKind::kCorner: return "corner";
    case FamilyKind::kPhiAB: return "phi_ab";
    case FamilyKind::kPsiPaab: return "psi_paab";
    case FamilyKind::kPhiAT: return "phi_at";
  }
  return "?";
}

IdealExpr ConstructIdealFamily(const RefinementSystem& sys, FamilyKind kind,
                               const Point& a, const Point& b) {
  CheckPoint(sys, a);
  CheckPoint(sys, b);
  switch (kind) {
    case FamilyKind::kStrip: return IdealExpr::Strip(a, b);
    case FamilyKind::kStripPlus: return IdealExpr::StripPlus(a, b);
    case FamilyKind::kCorner: return IdealExpr::Corner(sys, a, b);
    default:
      throw Error(ErrorKind::kConstraint,
                  std::string(FamilyKindName(kind)) + " is not an ideal family");
  }
}

PiecewiseBF ConstructBFFamily(const RefinementSystem& sys, FamilyKind kind,
                              const Point& a, const Point& b) {
  CheckPoint(sys, a);
  CheckPoint(sys, b);
  const Point pmin = PMin(sys);
  const Point pmax = PMax(sys);
  auto require = [](bool ok, const std::string& clause) {
    if (!ok) throw Error(ErrorKind::kConstraint, clause);
  };
  std::vector<Piece> pieces;
  auto push = [&](const Point& lo, bool lc, const Point& hi, bool hc,
                  const Leaf& leaf) {
    auto span = OrderInterval::TryMake(sys, lo, lc, hi, hc);
    if (span) pieces.push_back({*span, leaf});
  };
  switch (kind) {
    case FamilyKind::kPhiAB:
      require(a < b, "phi_ab requires a < b");
      require(!HasGapBelow(a), "Property2b: a has a gap below");
      push(pmin, true, a, false, Leaf::Identity());
      push(a, true, b, true, Leaf::Const(a));
      push(b, false, pmax, true, Leaf::Identity());
      break;
    case FamilyKind::kPsiPaab:
      require(a < b, "psi_paab requires a < b");
      require(HasGapBelow(a), "psi_paab requires a gap below a");
      require(PTest(a, b), "Property2a: (a, b) must lie in P");
      require(HasGapBelow(b), "Property2b: b must have a gap below");
      push(pmin, true, a, false, Leaf::Identity());
      push(a, true, b, false, Leaf::Const(*Predecessor(sys, a)));
      push(b, true, b, true, Leaf::Const(a));
      push(b, false, pmax, true, Leaf::Identity());
      break;
    case FamilyKind::kPhiAT:
      require(pmin < a && a <= b && b < pmax,
              "phi_at requires p_min < a <= t < p_max");
      require(!HasGapBelow(a), "Property2b: a has a gap below");
      push(pmin, true, b, true, Leaf::Const(pmin));
      push(b, false, pmax, true, Leaf::Const(a));
      break;
    default:
      throw Error(ErrorKind::kConstraint, std::string(FamilyKindName(kind)) +
                                              " is not a boundary-function family");
  }
  return MakeValidated(sys, std::move(pieces));
}

}  // namespace boundfn
