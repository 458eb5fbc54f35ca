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

// The property suites behind RunSuite.  Each suite draws its random inputs
// per instance from InstanceSeed(seed, index), so a reported violation can be
// replayed from its index alone.

#include <algorithm>
#include <functional>
#include <map>

#include "boundfn/boundary.hpp"
#include "boundfn/cocycle.hpp"
#include "boundfn/irreducible.hpp"
#include "boundfn/literal.hpp"
#include "boundfn/oracle.hpp"

namespace boundfn {

namespace {

class Ctx {
 public:
  Ctx(const RefinementSystem& sys, const SuiteOptions& options,
      SuiteReport& report)
      : sys(sys), options(options), report_(report) {}

  // Records one check; returns ok.
  bool Check(bool ok, std::size_t index, const std::string& kind,
             const std::function<std::string()>& witness) {
    ++report_.checks;
    if (!ok) report_.violations.push_back({index, kind, witness()});
    return ok;
  }

  void Fail(std::size_t index, const std::string& kind, const std::string& witness) {
    ++report_.checks;
    report_.violations.push_back({index, kind, witness});
  }

  std::size_t Budget() const { return report_.budget; }
  void CountInstance() { ++report_.instances; }

  // Generator for instance i.
  PointSampler Generator(std::size_t i) const {
    return PointSampler(sys, InstanceSeed(options.seed, i));
  }
  // Sampler for the checks of instance i, anchored at the given points.
  PointSampler Checker(std::size_t i, std::vector<Point> anchors) const {
    return PointSampler(sys, InstanceSeed(options.seed, i) ^ 0x5DEECE66DULL,
                        std::move(anchors));
  }
  SampleOptions Sampling(std::size_t i) const {
    return {InstanceSeed(options.seed, i), options.samples, options.depth_cap};
  }

  const RefinementSystem& sys;
  const SuiteOptions& options;

 private:
  SuiteReport& report_;
};

std::string P(const Point& x) { return FormatPoint(x); }

std::vector<Point> BFAnchors(const PiecewiseBF& phi) {
  std::vector<Point> out;
  for (const Piece& piece : phi.pieces()) {
    out.push_back(piece.span.lo());
    out.push_back(piece.span.hi());
    if (piece.leaf.kind == Leaf::Kind::kConst) out.push_back(piece.leaf.value);
  }
  return out;
}

std::vector<Point> Anchors(const RefinementSystem& sys,
                           std::initializer_list<const IdealExpr*> sets,
                           std::initializer_list<const PiecewiseBF*> bfs) {
  std::vector<Point> out;
  for (const IdealExpr* s : sets) {
    for (Point& p : AnchorPoints(sys, *s)) out.push_back(std::move(p));
  }
  for (const PiecewiseBF* phi : bfs) {
    for (Point& p : BFAnchors(*phi)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool BaseTest(SetMode mode, const Point& x, const Point& y) {
  return mode == SetMode::kIdeal ? PTest(x, y) : OrbitTest(x, y);
}

// A point of the orbit of y close to v.
Point NearValue(const RefinementSystem& sys, PointSampler& sampler,
                const Point& v, const Point& y) {
  const std::size_t horizon = v.preamble().size() + 2 * v.period().size() + 4;
  switch (sampler.Below(5)) {
    case 0:
      if (OrbitTest(v, y)) return v;
      [[fallthrough]];
    case 1:
      return Splice(sys, Prefix(v, sampler.Below(horizon + 1)), y);
    case 2:
      return Splice(sys, Prefix(Lowered(sys, v), sampler.Below(horizon + 1)), y);
    case 3:
      return Splice(sys, Prefix(Raised(sys, v), sampler.Below(horizon + 1)), y);
    default:
      return sampler.Below(2) == 0 ? sampler.InOrbitBelow(y) : sampler.InOrbitAbove(y);
  }
}

// The sup characterization of phi against membership in sigma at sampled
// (w, y): points of the orbit below phi(y) are members, points above are
// not, and a value with a gap below is attained.
void CheckBiconditions(Ctx& ctx, std::size_t index, const IdealExpr& sigma,
                       const PiecewiseBF& phi, PointSampler& sampler,
                       std::size_t count, const std::string& label) {
  const RefinementSystem& sys = ctx.sys;
  for (std::size_t k = 0; k < count; ++k) {
    const Point y = sampler.Random();
    const Point v = EvalBF(sys, phi, y);
    const Point w = NearValue(sys, sampler, v, y);
    auto witness = [&] {
      return label + " sigma=" + FormatIdealExpr(sigma) + " y=" + P(y) +
             " w=" + P(w) + " phi(y)=" + P(v);
    };
    const Verdict m = Member(sys, sigma, w, y, ctx.options.depth_cap);
    if (!ctx.Check(!m.unknown(), index, "Undecided", witness)) continue;
    if (w < v && BaseTest(sigma.mode, w, y)) {
      ctx.Check(m.yes(), index, "BelowBoundaryNotMember", witness);
    } else if (v < w) {
      ctx.Check(!m.yes(), index, "AboveBoundaryMember", witness);
    } else if (w == v && HasGapBelow(v)) {
      ctx.Check(m.yes(), index, "GapBelowValueNotAttained", witness);
    }
  }
}

// Pairs of one orbit, drawn around the sampler's anchors.
std::vector<std::pair<Point, Point>> OrbitPairs(PointSampler& sampler,
                                                std::size_t count) {
  std::vector<std::pair<Point, Point>> out;
  out.reserve(count);
  while (out.size() < count) {
    const Point y = sampler.Random();
    switch (sampler.Below(3)) {
      case 0: out.emplace_back(sampler.InOrbitBelow(y), y); break;
      case 1: out.emplace_back(y, sampler.InOrbitAbove(y)); break;
      default: out.emplace_back(sampler.InOrbit(y), y); break;
    }
  }
  return out;
}

// sub is contained in sup at every sampled pair.
void CheckInclusion(Ctx& ctx, std::size_t index, const IdealExpr& sub,
                    const IdealExpr& sup,
                    const std::vector<std::pair<Point, Point>>& pairs,
                    const std::string& kind) {
  for (const auto& [x, y] : pairs) {
    const Verdict a = Member(ctx.sys, sub, x, y, ctx.options.depth_cap);
    const Verdict b = a.yes() ? Member(ctx.sys, sup, x, y, ctx.options.depth_cap)
                              : Verdict::No("");
    ctx.Check(!a.unknown() && !b.unknown() && (!a.yes() || b.yes()), index, kind,
              [&] {
                return "sub=" + FormatIdealExpr(sub) + " sup=" + FormatIdealExpr(sup) +
                       " x=" + P(x) + " y=" + P(y);
              });
  }
}

// First sampled pair on which the two sets disagree.
std::optional<std::pair<Point, Point>> MembershipMismatch(
    const Ctx& ctx, const IdealExpr& s1, const IdealExpr& s2,
    const std::vector<std::pair<Point, Point>>& pairs) {
  for (const auto& [x, y] : pairs) {
    const Verdict a = Member(ctx.sys, s1, x, y, ctx.options.depth_cap);
    const Verdict b = Member(ctx.sys, s2, x, y, ctx.options.depth_cap);
    if (a.unknown() || b.unknown() || a.yes() != b.yes()) return std::make_pair(x, y);
  }
  return std::nullopt;
}

// Runs body(i) for each instance, turning escaped library errors into
// violations.
void ForInstances(Ctx& ctx, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < ctx.Budget(); ++i) {
    ctx.CountInstance();
    try {
      body(i);
    } catch (const Error& e) {
      ctx.Fail(i, std::string("Error:") + ErrorKindName(e.kind()), e.what());
    }
  }
}

IdealExpr Between(const PiecewiseBF& phi, IdealExpr tau) {
  return Combine(CombineOp::kUnion,
                 {SigmaOpen(phi),
                  Combine(CombineOp::kIntersection, {SigmaClosed(phi), std::move(tau)})});
}

// Deterministic parameter pool for the catalog suites: sampled points, their
// gap neighbours and points sharing their tails.
std::vector<Point> ParameterPool(const RefinementSystem& sys, std::uint64_t seed,
                                 std::size_t cap) {
  std::vector<Point> base = SamplePoints(sys, seed, 8, 3, 2);
  PointSampler sampler(sys, seed);
  std::vector<Point> out;
  for (const Point& x : base) {
    out.push_back(x);
    if (auto s = Successor(sys, x)) out.push_back(*s);
    if (auto p = Predecessor(sys, x)) out.push_back(*p);
    out.push_back(sampler.InOrbitAbove(x));
  }
  out.push_back(GenericTail());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  while (out.size() > cap) out.erase(out.begin() + static_cast<long>(sampler.Below(out.size())));
  return out;
}

// ---------------------------------------------------------------------------

void SuiteValidBoundaries(Ctx& ctx) {
  ForInstances(ctx, [&](std::size_t i) {
    PointSampler gen = ctx.Generator(i);
    const IdealExpr sigma = RandomIdealExpr(ctx.sys, gen, SetMode::kIdeal);
    const PiecewiseBF phi = BoundaryOf(ctx.sys, sigma);
    auto violations = ValidateBF(ctx.sys, phi, ctx.Sampling(i));
    ctx.Check(violations.empty(), i,
              violations.empty() ? "" : violations[0].kind, [&] {
                return "sigma=" + FormatIdealExpr(sigma) + " phi=" + FormatBF(phi) +
                       " detail=" + violations[0].detail;
              });
  });
}

void SuiteBiconditions(Ctx& ctx) {
  ForInstances(ctx, [&](std::size_t i) {
    PointSampler gen = ctx.Generator(i);
    const IdealExpr sigma = RandomIdealExpr(ctx.sys, gen, SetMode::kIdeal);
    const PiecewiseBF phi = BoundaryOf(ctx.sys, sigma);
    PointSampler checker = ctx.Checker(i, Anchors(ctx.sys, {&sigma}, {&phi}));
    CheckBiconditions(ctx, i, sigma, phi, checker, ctx.options.samples, "boundary");
  });
}

void SuiteBetweenSets(Ctx& ctx) {
  ForInstances(ctx, [&](std::size_t i) {
    PointSampler gen = ctx.Generator(i);
    const PiecewiseBF phi = RandomBF(ctx.sys, gen);
    const IdealExpr sigma = Between(phi, RandomIdealExpr(ctx.sys, gen, SetMode::kIdeal, 1));
    const PiecewiseBF psi = BoundaryOf(ctx.sys, sigma);
    auto witness = [&] { return "phi=" + FormatBF(phi) + " sigma=" + FormatIdealExpr(sigma); };
    ctx.Check(BFLessEq(ctx.sys, BFMinus(ctx.sys, phi), psi) && BFLessEq(ctx.sys, psi, phi),
              i, "BoundaryOutsideMinusAndPhi", witness);
    PointSampler checker = ctx.Checker(i, Anchors(ctx.sys, {&sigma}, {&phi, &psi}));
    const auto pairs = OrbitPairs(checker, ctx.options.samples);
    CheckInclusion(ctx, i, SigmaOpen(psi), sigma, pairs, "OpenSetNotInside");
    CheckInclusion(ctx, i, sigma, SigmaClosed(psi), pairs, "SetNotInsideClosed");
    CheckInclusion(ctx, i, SigmaOpen(phi), sigma, pairs, "OpenSetNotInside");
    CheckInclusion(ctx, i, sigma, SigmaClosed(phi), pairs, "SetNotInsideClosed");
  });
}

void SuiteOpenClosed(Ctx& ctx) {
  ForInstances(ctx, [&](std::size_t i) {
    PointSampler gen = ctx.Generator(i);
    const PiecewiseBF phi = RandomBF(ctx.sys, gen);
    const PiecewiseBF minus = BFMinus(ctx.sys, phi);
    const IdealExpr closed = SigmaClosed(phi);
    const IdealExpr open = SigmaOpen(phi);
    ctx.Check(BoundaryOf(ctx.sys, closed) == phi, i, "ClosedBoundaryDiffers",
              [&] { return "phi=" + FormatBF(phi); });
    ctx.Check(BoundaryOf(ctx.sys, open) == minus, i, "OpenBoundaryDiffers",
              [&] { return "phi=" + FormatBF(phi); });
    PointSampler checker = ctx.Checker(i, BFAnchors(phi));
    CheckBiconditions(ctx, i, closed, phi, checker, ctx.options.samples / 2, "closed");
    CheckBiconditions(ctx, i, open, minus, checker, ctx.options.samples / 2, "open");
  });
}

void SuiteSandwich(Ctx& ctx) {
  ForInstances(ctx, [&](std::size_t i) {
    PointSampler gen = ctx.Generator(i);
    const PiecewiseBF phi = RandomBF(ctx.sys, gen);
    const IdealExpr sigma = Between(phi, RandomIdealExpr(ctx.sys, gen, SetMode::kIdeal, 1));
    const SampleOptions sampling = ctx.Sampling(i);
    auto witness = [&] { return "phi=" + FormatBF(phi) + " sigma=" + FormatIdealExpr(sigma); };

    ctx.Check(SandwichCheck(ctx.sys, SigmaClosed(phi), phi, sampling).yes(), i,
              "ClosedSetRejected", witness);
    const bool open_expected = BFMinus(ctx.sys, phi) == phi;
    ctx.Check(SandwichCheck(ctx.sys, SigmaOpen(phi), phi, sampling).yes() == open_expected,
              i, "OpenSetVerdict", witness);
    const Verdict v = SandwichCheck(ctx.sys, sigma, phi, sampling);
    const bool expected = BoundaryOf(ctx.sys, sigma) == phi;
    ctx.Check(v.yes() == expected, i, "SandwichVerdict", witness);
    if (!v.yes()) return;
    // A set with boundary phi contains L_phi.
    PointSampler checker = ctx.Checker(i, Anchors(ctx.sys, {&sigma}, {&phi}));
    for (std::size_t k = 0; k < ctx.options.samples; ++k) {
      const Point y = checker.Random();
      if (!InLPhi(ctx.sys, phi, y, ctx.options.depth_cap).yes()) continue;
      const Point fy = EvalBF(ctx.sys, phi, y);
      ctx.Check(Member(ctx.sys, sigma, fy, y, ctx.options.depth_cap).yes(), i,
                "LPhiPointMissing", [&] { return witness() + " y=" + P(y); });
    }
  });
}

void SuitePlusGap(Ctx& ctx) {
  ForInstances(ctx, [&](std::size_t i) {
    PointSampler gen = ctx.Generator(i);
    const PiecewiseBF phi = RandomBF(ctx.sys, gen);
    const PiecewiseBF plus = BFPlus(ctx.sys, phi, ctx.options.depth_cap);
    std::vector<Point> ys = BFAnchors(plus);
    PointSampler checker = ctx.Checker(i, BFAnchors(phi));
    for (std::size_t k = 0; k < ctx.options.samples / 10; ++k) ys.push_back(checker.Random());
    for (const Point& y : ys) {
      const Point py = EvalBF(ctx.sys, plus, y);
      if (!(EvalBF(ctx.sys, phi, y) < py)) continue;
      for (int k = 0; k < 10; ++k) {
        const Point z = k % 2 == 0 ? checker.InOrbitAbove(y) : checker.Random();
        if (!(y < z)) continue;
        ctx.Check(py < EvalBF(ctx.sys, phi, z), i, "PlusValueNotBelowLater", [&] {
          return "phi=" + FormatBF(phi) + " y=" + P(y) + " z=" + P(z);
        });
      }
    }
  });
}

void SuitePlusValid(Ctx& ctx) {
  ForInstances(ctx, [&](std::size_t i) {
    PointSampler gen = ctx.Generator(i);
    const PiecewiseBF phi = RandomBF(ctx.sys, gen);
    const PiecewiseBF plus = BFPlus(ctx.sys, phi, ctx.options.depth_cap);
    auto violations = ValidateBF(ctx.sys, plus, ctx.Sampling(i));
    ctx.Check(violations.empty(), i, violations.empty() ? "" : violations[0].kind, [&] {
      return "phi=" + FormatBF(phi) + " plus=" + FormatBF(plus) + " detail=" +
             violations[0].detail;
    });
    ctx.Check(BFLessEq(ctx.sys, phi, plus), i, "PlusBelowPhi",
              [&] { return "phi=" + FormatBF(phi); });
  });
}

void SuitePlusMinus(Ctx& ctx) {
  ForInstances(ctx, [&](std::size_t i) {
    PointSampler gen = ctx.Generator(i);
    const PiecewiseBF phi = RandomBF(ctx.sys, gen);
    const PiecewiseBF minus = BFMinus(ctx.sys, phi);
    const PiecewiseBF plus = BFPlus(ctx.sys, phi, ctx.options.depth_cap);
    auto witness = [&] { return "phi=" + FormatBF(phi); };
    ctx.Check(BFMinus(ctx.sys, plus) == minus, i, "MinusOfPlus", witness);
    ctx.Check(BFPlus(ctx.sys, minus, ctx.options.depth_cap) == plus, i, "PlusOfMinus",
              witness);
  });
}

void SuiteEquivBetween(Ctx& ctx) {
  ForInstances(ctx, [&](std::size_t i) {
    PointSampler gen = ctx.Generator(i);
    const PiecewiseBF phi = RandomBF(ctx.sys, gen);
    PiecewiseBF psi = phi;
    switch (gen.Below(5)) {
      case 0: break;
      case 1: psi = BFMinus(ctx.sys, phi); break;
      case 2: psi = BFPlus(ctx.sys, phi, ctx.options.depth_cap); break;
      case 3: psi = RandomBF(ctx.sys, gen); break;
      default:
        psi = BFLattice(LatticeOp::kJoin, ctx.sys, phi, RandomBF(ctx.sys, gen));
        break;
    }
    const bool equiv = BFEquiv(ctx.sys, phi, psi);
    const bool between = BFBetween(ctx.sys, phi, psi, ctx.options.depth_cap);
    ctx.Check(equiv == between, i, "EquivDiffersFromBetween", [&] {
      return "phi=" + FormatBF(phi) + " psi=" + FormatBF(psi) +
             " equiv=" + (equiv ? "true" : "false");
    });
  });
}

void SuiteLattice(Ctx& ctx) {
  ForInstances(ctx, [&](std::size_t i) {
    PointSampler gen = ctx.Generator(i);
    const IdealExpr s = RandomIdealExpr(ctx.sys, gen, SetMode::kIdeal);
    const IdealExpr t = RandomIdealExpr(ctx.sys, gen, SetMode::kIdeal);
    const PiecewiseBF ps = BoundaryOf(ctx.sys, s);
    const PiecewiseBF pt = BoundaryOf(ctx.sys, t);
    const IdealExpr u = Combine(CombineOp::kUnion, {s, t});
    const IdealExpr m = Combine(CombineOp::kIntersection, {s, t});
    const PiecewiseBF join = BFLattice(LatticeOp::kJoin, ctx.sys, ps, pt);
    const PiecewiseBF meet = BFLattice(LatticeOp::kMeet, ctx.sys, ps, pt);
    auto witness = [&] { return "s=" + FormatIdealExpr(s) + " t=" + FormatIdealExpr(t); };
    ctx.Check(BoundaryOf(ctx.sys, u) == join, i, "UnionBoundaryNotJoin", witness);
    ctx.Check(BoundaryOf(ctx.sys, m) == meet, i, "IntersectionBoundaryNotMeet", witness);
    // The lattice values are checked against membership directly.
    PointSampler checker = ctx.Checker(i, Anchors(ctx.sys, {&s, &t}, {}));
    CheckBiconditions(ctx, i, u, join, checker, ctx.options.samples / 2, "join");
    CheckBiconditions(ctx, i, m, meet, checker, ctx.options.samples / 2, "meet");
  });
}

void SuiteMeetCatalog(Ctx& ctx) {
  const RefinementSystem& sys = ctx.sys;
  ForInstances(ctx, [&](std::size_t i) {
    PointSampler gen = ctx.Generator(i);
    const PiecewiseBF phi = RandomBF(sys, gen);
    const BFClass c = ClassifyMeetBF(sys, phi);  // throws on a bad witness
    ctx.Check(c.irreducible == (c.form != FormTag::kOther), i, "UncertifiedVerdict",
              [&] { return "phi=" + FormatBF(phi); });
  });
  // Constructor grid: every pair a <= b from the parameter pool.
  const std::vector<Point> pool = ParameterPool(sys, ctx.options.seed, 16);
  const std::size_t index = ctx.Budget();
  SampleOptions sampling{ctx.options.seed, ctx.options.samples, ctx.options.depth_cap};
  for (const Point& a : pool) {
    for (const Point& b : pool) {
      if (b < a) continue;
      std::vector<IdealExpr> sets = {IdealExpr::Strip(a, b)};
      if (PTest(a, b)) sets.push_back(IdealExpr::StripPlus(a, b));
      for (const IdealExpr& sigma : sets) {
        auto witness = [&] { return "sigma=" + FormatIdealExpr(sigma); };
        try {
          const IdealClassification c = ClassifyMeetIdeal(sys, sigma);
          if (c.verdict == IdealClass::kIrreducible) {
            ctx.Check(c.boundary_irreducible, index, "CrossLaw", witness);
          } else if (c.verdict == IdealClass::kReducible) {
            auto bad = CheckDecomposition(sys, sigma, CombineOp::kIntersection,
                                          c.decomposition, sampling);
            ctx.Check(bad && *bad == 0, index, "Decomposition", witness);
          }
          if (a < b && !HasGapBelow(a)) {
            const PiecewiseBF phi = ConstructBFFamily(sys, FamilyKind::kPhiAB, a, b);
            ctx.Check(ClassifyMeetBF(sys, phi).form == FormTag::kPhiAB, index,
                      "PhiABNotIrreducible", [&] { return "phi=" + FormatBF(phi); });
          }
          if (a < b && HasGapBelow(a) && HasGapBelow(b) && PTest(a, b)) {
            const PiecewiseBF phi = ConstructBFFamily(sys, FamilyKind::kPsiPaab, a, b);
            ctx.Check(ClassifyMeetBF(sys, phi).form == FormTag::kPsiPaab, index,
                      "PsiPaabNotIrreducible", [&] { return "phi=" + FormatBF(phi); });
          }
        } catch (const Error& e) {
          ctx.Fail(index, std::string("Error:") + ErrorKindName(e.kind()),
                   witness() + " " + e.what());
        }
      }
    }
  }
}

void SuiteJoinFunctions(Ctx& ctx) {
  const RefinementSystem& sys = ctx.sys;
  ForInstances(ctx, [&](std::size_t i) {
    PointSampler gen = ctx.Generator(i);
    const PiecewiseBF phi = RandomBF(sys, gen);
    const BFClass c = ClassifyJoinBF(sys, phi);  // throws on a bad witness
    auto witness = [&] { return "phi=" + FormatBF(phi); };
    ctx.Check(c.irreducible == (c.form != FormTag::kOther), i, "UncertifiedVerdict",
              witness);
    if (!c.irreducible) return;
    // Sampled values of an irreducible function take at most two values.
    PointSampler checker = ctx.Checker(i, BFAnchors(phi));
    std::vector<Point> values;
    for (std::size_t k = 0; k < ctx.options.samples / 5; ++k) {
      values.push_back(EvalBF(sys, phi, checker.Random()));
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    ctx.Check(values.size() <= 2, i, "RangeTooLarge", witness);
  });
  const std::vector<Point> pool = ParameterPool(sys, ctx.options.seed, 16);
  const Point pmin = PMin(sys);
  const Point pmax = PMax(sys);
  for (const Point& a : pool) {
    for (const Point& t : pool) {
      if (!(pmin < a && a <= t && t < pmax) || HasGapBelow(a)) continue;
      try {
        const PiecewiseBF phi = ConstructBFFamily(sys, FamilyKind::kPhiAT, a, t);
        ctx.Check(ClassifyJoinBF(sys, phi).form == FormTag::kPhiAT, ctx.Budget(),
                  "PhiATNotIrreducible", [&] { return "phi=" + FormatBF(phi); });
      } catch (const Error& e) {
        ctx.Fail(ctx.Budget(), std::string("Error:") + ErrorKindName(e.kind()),
                 "a=" + P(a) + " t=" + P(t) + " " + e.what());
      }
    }
  }
}

void CheckCorner(Ctx& ctx, std::size_t index, const Point& a, const Point& t,
                 std::size_t samples) {
  const RefinementSystem& sys = ctx.sys;
  const IdealExpr corner = IdealExpr::Corner(sys, a, t);
  auto witness = [&] { return "corner=" + FormatIdealExpr(corner); };
  const IdealClassification c = ClassifyJoinIdeal(sys, corner);
  const bool exception = HasGapBelow(a) && HasGapAbove(sys, t) &&
                         !PTest(*Predecessor(sys, a), *Successor(sys, t));
  ctx.Check((c.verdict == IdealClass::kReducible) == exception, index, "CatalogVerdict",
            witness);
  ctx.Check(c.boundary_irreducible, index, "CrossLaw", witness);
  SampleOptions sampling{InstanceSeed(ctx.options.seed, index), samples,
                         ctx.options.depth_cap};
  if (c.verdict == IdealClass::kReducible) {
    auto bad = CheckDecomposition(sys, corner, CombineOp::kUnion, c.decomposition, sampling);
    ctx.Check(bad && *bad == 0, index, "Decomposition", witness);
  }
  if (HasGapBelow(a)) return;
  const PiecewiseBF phi = ConstructBFFamily(sys, FamilyKind::kPhiAT, a, t);
  ctx.Check(*c.boundary == phi, index, "CornerBoundary", witness);
  PointSampler checker(sys, sampling.seed, Anchors(sys, {&corner}, {}));
  auto pairs = OrbitPairs(checker, samples);
  if (PTest(PMin(sys), t)) pairs.emplace_back(PMin(sys), t);
  auto mismatch = MembershipMismatch(ctx, SigmaOpen(phi), corner, pairs);
  ctx.Check(!mismatch, index, "OpenSetNotCorner", [&] {
    return witness() + " x=" + P(mismatch->first) + " y=" + P(mismatch->second);
  });
  // The closed set is the corner itself, or the corner moved up to sa when
  // a has a gap above.  When t has a gap below, the pair (p_min, t) is also
  // interior to the sub-level set, so it is the one allowed difference.
  const Point x_top = HasGapAbove(sys, a) ? *Successor(sys, a) : a;
  if (t < x_top) return;
  const IdealExpr closed = SigmaClosed(phi);
  const IdealExpr expected = IdealExpr::Corner(sys, x_top, t);
  const Point pmin = PMin(sys);
  for (const auto& [x, y] : pairs) {
    const Verdict got = Member(sys, closed, x, y, ctx.options.depth_cap);
    bool want = Member(sys, expected, x, y, ctx.options.depth_cap).yes();
    if (x == pmin && y == t && HasGapBelow(t) && PTest(x, y)) want = true;
    ctx.Check(!got.unknown() && got.yes() == want, index, "ClosedSetNotCorner", [&] {
      return witness() + " x=" + P(x) + " y=" + P(y);
    });
  }
}

void SuiteJoinCatalog(Ctx& ctx) {
  const RefinementSystem& sys = ctx.sys;
  const Point pmin = PMin(sys);
  const Point pmax = PMax(sys);
  ctx.CountInstance();
  std::size_t index = 0;
  try {
    ctx.Check(ClassifyJoinIdeal(sys, IdealExpr::Empty()).verdict == IdealClass::kIrreducible,
              index, "EmptyNotIrreducible", [] { return "empty"; });
    if (sys == RefinementSystem::Binary()) {
      CheckCorner(ctx, index, ParsePoint(sys, "2|1"), ParsePoint(sys, "21|2"),
                  ctx.options.samples);
    }
  } catch (const Error& e) {
    ctx.Fail(index, std::string("Error:") + ErrorKindName(e.kind()), e.what());
  }
  const std::vector<Point> pool = ParameterPool(sys, ctx.options.seed, 14);
  const std::size_t samples = std::min<std::size_t>(ctx.options.samples, 100);
  for (const Point& a : pool) {
    for (const Point& t : pool) {
      if (!(pmin < a && a <= t && t < pmax)) continue;
      ++index;
      ctx.CountInstance();
      try {
        CheckCorner(ctx, index, a, t, samples);
      } catch (const Error& e) {
        ctx.Fail(index, std::string("Error:") + ErrorKindName(e.kind()),
                 "a=" + P(a) + " t=" + P(t) + " " + e.what());
      }
    }
  }
}

void SuiteCocycle(Ctx& ctx) {
  const RefinementSystem& sys = ctx.sys;
  const std::size_t n = ctx.Budget();
  ctx.CountInstance();
  PointSampler s = ctx.Generator(0);
  for (std::size_t k = 0; k < n; ++k) {
    const Point x = s.Random();
    const Point y = k % 4 == 0 ? Raised(sys, x) : s.InOrbit(x);
    auto witness = [&] { return "x=" + P(x) + " y=" + P(y); };
    const Rational bx = BTilde(sys, x);
    const Rational by = BTilde(sys, y);
    ctx.Check((x <= y) == (bx <= by) || bx == by, 0, "BTildeNotMonotone", witness);
    if (x != y && bx == by) {
      ctx.Check(Successor(sys, x) == y || Successor(sys, y) == x, 0,
                "BTildeTieOutsideGap", witness);
    }
    if (OrbitTest(x, y)) {
      ctx.Check(PTest(x, y) == (CTilde(sys, x, y) >= 0), 0, "NotAnalytic", witness);
    }
  }
  for (std::size_t k = 0; k < n / 2; ++k) {
    const Point x = s.Random();
    const Point y = s.InOrbit(x);
    const Point z = s.InOrbit(x);
    ctx.Check(CTilde(sys, x, z) == CTilde(sys, x, y) + CTilde(sys, y, z), 0,
              "NotAdditive", [&] { return "x=" + P(x) + " y=" + P(y) + " z=" + P(z); });
  }
  // Draw until the stated number of pairs qualify; the attempt cap only
  // guards against a sampler that cannot produce them.
  for (std::size_t k = 0, tries = 0; k < n / 2 && tries < 20 * n; ++tries) {
    const Point x = s.Random();
    const Point y = s.InOrbitAbove(x);
    if (!PTest(x, y)) continue;
    ++k;
    const auto sx = GapIndicesBelow(sys, x, 20);
    const auto sy = GapIndicesBelow(sys, y, 20);
    ctx.Check(std::includes(sy.begin(), sy.end(), sx.begin(), sx.end()), 0,
              "GapSetNotMonotone", [&] { return "x=" + P(x) + " y=" + P(y); });
  }
  for (std::size_t k = 0, tries = 0; k < n / 2 && tries < 20 * n; ++tries) {
    const Point x = s.Random();
    const Point y = k % 3 == 0 ? Raised(sys, x) : s.Random();
    if (x == y) continue;
    ++k;
    ctx.Check(OrderByCocycle(sys, x, y) == OrderCompare(sys, x, y), 0,
              "CocycleOrderDiffers", [&] { return "x=" + P(x) + " y=" + P(y); });
  }
  if (sys == RefinementSystem::Binary()) {
    ctx.Check(BTilde(sys, ParsePoint(sys, "|2")) == Rational(1), 0, "BTildeValue",
              [] { return "|2"; });
    ctx.Check(BTilde(sys, ParsePoint(sys, "|12")) == Rational(1, 3), 0, "BTildeValue",
              [] { return "|12"; });
  }
}

// Symbolic boundary of a finite set against the word-level oracle, on points
// of every cylinder.
void CompareFinite(Ctx& ctx, std::size_t index, const FiniteModel& model,
                   const MatrixUnitSet& s) {
  const RefinementSystem& sys = ctx.sys;
  const PiecewiseBF phi = BoundaryOf(sys, IdealExpr::FiniteLevel(s));
  const Point pmin = PMin(sys);
  const Point pmax = PMax(sys);
  for (const Word& v : model.words) {
    const std::optional<Word> best = BruteBoundary(model, s, v);
    for (const Point& tail : {pmin, pmax, GenericTail(), Splice(sys, Word{{2}}, pmin)}) {
      const Point y = Splice(sys, v, tail);
      Point expected = pmin;
      if (best) {
        expected = (s.mode == SetMode::kIdeal && *best == v) ? y : Splice(sys, *best, pmax);
      }
      ctx.Check(EvalBF(sys, phi, y) == expected, index, "OracleMismatch", [&] {
        return "set=" + FormatIdealExpr(IdealExpr::FiniteLevel(s)) + " y=" + P(y) +
               " expected=" + P(expected) + " got=" + P(EvalBF(sys, phi, y));
      });
    }
  }
}

void SuiteOracle(Ctx& ctx) {
  const RefinementSystem& sys = ctx.sys;
  std::size_t index = 0;
  // Exhaustive: every closed set of the small levels.
  for (SetMode mode : {SetMode::kIdeal, SetMode::kModule}) {
    for (std::size_t level = 1; level <= 2; ++level) {
      const FiniteModel model = BuildFiniteModel(sys, level);
      std::vector<WordPair> candidates;
      for (const Word& u : model.words) {
        for (const Word& v : model.words) {
          if (mode == SetMode::kModule || !(v < u)) candidates.push_back({u, v});
        }
      }
      if (candidates.size() > 16) continue;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << candidates.size()); ++mask) {
        std::set<WordPair> pairs;
        for (std::size_t b = 0; b < candidates.size(); ++b) {
          if (mask >> b & 1) pairs.insert(candidates[b]);
        }
        if (!BruteIsClosed(model, pairs)) continue;
        ctx.CountInstance();
        const MatrixUnitSet s{level, pairs, mode};
        ctx.Check(CloseFiniteLevel(sys, level, pairs, mode) == s, index, "ClosureDiffers",
                  [&] { return FormatIdealExpr(IdealExpr::FiniteLevel(s)); });
        CompareFinite(ctx, index, model, s);
        ++index;
      }
    }
  }
  // Random generator sets up to level 3, including membership on points.
  for (std::size_t k = 0; k < ctx.Budget(); ++k, ++index) {
    ctx.CountInstance();
    PointSampler gen = ctx.Generator(index);
    const SetMode mode = k % 4 == 3 ? SetMode::kModule : SetMode::kIdeal;
    std::size_t level = 1 + k % 3;
    while (level > 1 && BuildFiniteModel(sys, level, 1 << 20).words.size() > 64) --level;
    const FiniteModel model = BuildFiniteModel(sys, level);
    std::set<WordPair> gens;
    const std::size_t count = 1 + gen.Below(4);
    for (std::size_t g = 0; g < count; ++g) {
      Word u = gen.RandomWord(level);
      Word v = gen.RandomWord(level);
      if (mode == SetMode::kIdeal && v < u) std::swap(u, v);
      gens.insert({u, v});
    }
    const MatrixUnitSet s = CloseFiniteLevel(sys, level, gens, mode);
    const std::set<WordPair> brute = BruteClose(model, gens);
    ctx.Check(s.pairs == brute, index, "ClosureDiffers",
              [&] { return FormatIdealExpr(IdealExpr::FiniteLevel(s)); });
    CompareFinite(ctx, index, model, s);
    const IdealExpr sigma = IdealExpr::FiniteLevel(s);
    PointSampler checker = ctx.Checker(index, AnchorPoints(sys, sigma));
    for (const auto& [x, y] : OrbitPairs(checker, ctx.options.samples / 5)) {
      const bool expected = brute.count({Prefix(x, level), Prefix(y, level)}) > 0 &&
                            BaseTest(mode, x, y);
      ctx.Check(Member(sys, sigma, x, y).yes() == expected, index, "MembershipDiffers",
                [&] { return FormatIdealExpr(sigma) + " x=" + P(x) + " y=" + P(y); });
    }
  }
}

void SuiteModule(Ctx& ctx) {
  const RefinementSystem& sys = ctx.sys;
  ForInstances(ctx, [&](std::size_t i) {
    PointSampler gen = ctx.Generator(i);
    const IdealExpr sigma = RandomIdealExpr(sys, gen, SetMode::kModule);
    const PiecewiseBF phi = BoundaryOf(sys, sigma);
    auto violations = ValidateBF(sys, phi, ctx.Sampling(i));
    ctx.Check(violations.empty(), i, violations.empty() ? "" : violations[0].kind, [&] {
      return "sigma=" + FormatIdealExpr(sigma) + " phi=" + FormatBF(phi) + " detail=" +
             violations[0].detail;
    });
    PointSampler checker = ctx.Checker(i, Anchors(sys, {&sigma}, {&phi}));
    CheckBiconditions(ctx, i, sigma, phi, checker, ctx.options.samples / 2, "module");
    // Module sets reach below the diagonal; ideal sets never do.
    const IdealExpr full = IdealExpr::Full(SetMode::kModule);
    const IdealExpr ideal = RandomIdealExpr(sys, gen, SetMode::kIdeal);
    for (const auto& [x, y] : OrbitPairs(checker, ctx.options.samples / 5)) {
      ctx.Check(Member(sys, full, x, y).yes(), i, "ModuleFullMissesPair",
                [&] { return "x=" + P(x) + " y=" + P(y); });
      ctx.Check(!Member(sys, ideal, x, y).yes() || PTest(x, y), i, "IdealPairOutsideP",
                [&] { return FormatIdealExpr(ideal) + " x=" + P(x) + " y=" + P(y); });
    }
  });
}

using SuiteFn = void (*)(Ctx&);

const std::map<std::string, std::pair<SuiteFn, std::size_t>>& Registry() {
  static const std::map<std::string, std::pair<SuiteFn, std::size_t>> registry = {
      {"prop1", {SuiteValidBoundaries, 200}},
      {"def-biconditions", {SuiteBiconditions, 100}},
      {"prop4_5", {SuiteBetweenSets, 50}},
      {"prop6", {SuiteOpenClosed, 50}},
      {"prop7", {SuiteSandwich, 50}},
      {"lemma8", {SuitePlusGap, 50}},
      {"prop9", {SuitePlusValid, 50}},
      {"lemma10", {SuitePlusMinus, 50}},
      {"prop11", {SuiteEquivBetween, 100}},
      {"lemma12", {SuiteLattice, 100}},
      {"prop13", {SuiteMeetCatalog, 50}},
      {"prop14", {SuiteJoinFunctions, 50}},
      {"prop15", {SuiteJoinCatalog, 1}},
      {"cocycle", {SuiteCocycle, 1000}},
      {"oracle-equivalence", {SuiteOracle, 50}},
      {"module-set-mode", {SuiteModule, 50}},
  };
  return registry;
}

}  // namespace

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {
      "prop1",   "def-biconditions", "prop4_5", "prop6",  "prop7",
      "lemma8",  "prop9",            "lemma10", "prop11", "lemma12",
      "prop13",  "prop14",           "prop15",  "cocycle", "oracle-equivalence",
      "module-set-mode"};
  return names;
}

bool IsSuiteName(const std::string& name) { return Registry().count(name) > 0; }

std::size_t DefaultBudget(const std::string& suite) {
  auto it = Registry().find(suite);
  if (it == Registry().end()) {
    throw Error(ErrorKind::kConstraint, "unknown suite '" + suite + "'");
  }
  return it->second.second;
}

SuiteReport RunSuite(const std::string& name, const RefinementSystem& sys,
                     const SuiteOptions& options) {
  auto it = Registry().find(name);
  if (it == Registry().end()) {
    throw Error(ErrorKind::kConstraint, "unknown suite '" + name + "'");
  }
  SuiteReport report;
  report.suite = name;
  report.system = FormatSystem(sys);
  report.seed = options.seed;
  report.budget = options.budget == 0 ? it->second.second : options.budget;
  Ctx ctx(sys, options, report);
  try {
    it->second.first(ctx);
  } catch (const Error& e) {
    ctx.Fail(report.instances, std::string("Error:") + ErrorKindName(e.kind()), e.what());
  }
  return report;
}

}  // namespace boundfn
