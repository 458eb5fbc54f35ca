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

#include "boundfn/ideal.hpp"

#include <algorithm>
#include <functional>

#include "boundfn/sample.hpp"

namespace boundfn {

namespace {

constexpr std::size_t kMaxWordsPerLevel = 1u << 14;

bool BaseTest(SetMode mode, const Point& x, const Point& y) {
  return mode == SetMode::kIdeal ? PTest(x, y) : OrbitTest(x, y);
}

Word Concat(const Word& u, const Word& v) {
  Word w = u;
  w.digits.insert(w.digits.end(), v.digits.begin(), v.digits.end());
  return w;
}

// Words of length `count` for positions level+1 .. level+count.
std::vector<Word> Extensions(const RefinementSystem& sys, std::size_t level,
                             std::size_t count) {
  std::vector<Word> out{Word{}};
  for (std::size_t n = level + 1; n <= level + count; ++n) {
    std::vector<Word> next;
    for (const Word& w : out) {
      for (Digit d = 1; d <= sys.radix(n); ++d) {
        Word c = w;
        c.digits.push_back(d);
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
    if (out.size() > kMaxWordsPerLevel) {
      throw Error(ErrorKind::kCapExceeded, "too many words to enumerate");
    }
  }
  return out;
}

std::vector<Word> WordsAtLevel(const RefinementSystem& sys, std::size_t level) {
  return Extensions(sys, 0, level);
}

void CheckPairs(const RefinementSystem& sys, std::size_t level,
                const std::set<WordPair>& pairs, SetMode mode) {
  for (const auto& [u, v] : pairs) {
    if (u.level() != level || v.level() != level) {
      throw Error(ErrorKind::kLevelMismatch,
                  "word pair (" + FormatWord(u) + "," + FormatWord(v) +
                      ") is not at level " + std::to_string(level));
    }
    CheckWord(sys, u);
    CheckWord(sys, v);
    if (mode == SetMode::kIdeal && v < u) {
      throw Error(ErrorKind::kOrderViolation,
                  "ideal-set generator (" + FormatWord(u) + "," +
                      FormatWord(v) + ") has u > v");
    }
  }
}

}  // namespace

MatrixUnitSet CloseFiniteLevel(const RefinementSystem& sys, std::size_t level,
                               const std::set<WordPair>& generators,
                               SetMode mode) {
  CheckPairs(sys, level, generators, mode);
  MatrixUnitSet out;
  out.level = level;
  out.mode = mode;
  if (generators.empty()) return out;
  const std::vector<Word> words = WordsAtLevel(sys, level);
  for (const auto& [u, v] : generators) {
    auto u_end = std::upper_bound(words.begin(), words.end(), u);
    auto v_begin = std::lower_bound(words.begin(), words.end(), v);
    for (auto i = words.begin(); i != u_end; ++i) {
      for (auto j = v_begin; j != words.end(); ++j) out.pairs.insert({*i, *j});
    }
  }
  return out;
}

IdealExpr IdealExpr::Empty(SetMode mode) {
  IdealExpr e;
  e.kind = Kind::kEmpty;
  e.mode = mode;
  return e;
}

IdealExpr IdealExpr::Full(SetMode mode) {
  IdealExpr e;
  e.kind = Kind::kFull;
  e.mode = mode;
  return e;
}

IdealExpr IdealExpr::FiniteLevel(MatrixUnitSet set) {
  IdealExpr e;
  e.kind = Kind::kFiniteLevel;
  e.mode = set.mode;
  e.finite = std::move(set);
  return e;
}

IdealExpr IdealExpr::Strip(Point a, Point b, SetMode mode) {
  IdealExpr e;
  e.kind = Kind::kStrip;
  e.mode = mode;
  e.a = std::move(a);
  e.b = std::move(b);
  return e;
}

IdealExpr IdealExpr::StripPlus(Point a, Point b, SetMode mode) {
  if (!BaseTest(mode, a, b)) {
    throw Error(ErrorKind::kConstraint,
                "strip_plus needs (a, b) in " +
                    std::string(mode == SetMode::kIdeal ? "P" : "G"));
  }
  IdealExpr e = Strip(std::move(a), std::move(b), mode);
  e.kind = Kind::kStripPlus;
  return e;
}

IdealExpr IdealExpr::Corner(const RefinementSystem& sys, Point a, Point t,
                            SetMode mode) {
  if (!(PMin(sys) < a && a <= t && t < PMax(sys))) {
    throw Error(ErrorKind::kConstraint, "corner needs p_min < a <= t < p_max");
  }
  IdealExpr e = Strip(std::move(a), std::move(t), mode);
  e.kind = Kind::kCorner;
  return e;
}

IdealExpr IdealExpr::OfBFOpen(PiecewiseBF phi) {
  IdealExpr e;
  e.kind = Kind::kOfBFOpen;
  e.mode = phi.mode();
  e.phi = std::move(phi);
  return e;
}

IdealExpr IdealExpr::OfBFClosed(PiecewiseBF phi) {
  IdealExpr e = OfBFOpen(std::move(phi));
  e.kind = Kind::kOfBFClosed;
  return e;
}

const char* IdealKindName(IdealExpr::Kind kind) {
  using K = IdealExpr::Kind;
  switch (kind) {
    case K::kEmpty: return "empty";
    case K::kFull: return "full";
    case K::kFiniteLevel: return "finite";
    case K::kStrip: return "strip";
    case K::kStripPlus: return "strip_plus";
    case K::kCorner: return "corner";
    case K::kOfBFOpen: return "open";
    case K::kOfBFClosed: return "closed";
    case K::kUnion: return "union";
    case K::kIntersection: return "intersection";
  }
  return "?";
}

const char* VerdictName(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::kYes: return "yes";
    case Verdict::Kind::kNo: return "no";
    case Verdict::Kind::kUnknown: return "unknown";
  }
  return "?";
}

Verdict SigmaClosedMember(const RefinementSystem& sys, const PiecewiseBF& phi,
                          const Point& x, const Point& y,
                          std::size_t depth_cap) {
  return LinkedCylinderSearch(sys, phi, x, y, CylinderTest::kEta, depth_cap);
}

Verdict LinkedCylinderSearch(const RefinementSystem& sys, const PiecewiseBF& phi,
                             const Point& x, const Point& y, CylinderTest test,
                             std::size_t depth_cap) {
  if (!BaseTest(phi.mode(), x, y)) {
    return Verdict::No(phi.mode() == SetMode::kIdeal ? "not in P" : "not in G");
  }
  std::vector<Point> pts{x, y};
  for (const Piece& piece : phi.pieces()) {
    pts.push_back(piece.span.lo());
    pts.push_back(piece.span.hi());
    if (piece.leaf.kind == Leaf::Kind::kConst) pts.push_back(piece.leaf.value);
  }
  const Horizon h = JointHorizon(sys, pts);
  // Last position where x and y differ; linked cylinders must start after it.
  std::size_t agree = std::max(x.preamble().size(), y.preamble().size());
  while (agree > 0 && x.digit(agree) == y.digit(agree)) --agree;
  const std::size_t bound = std::max(agree, h.settle) + 2 * h.period + 1;
  for (std::size_t m = agree; m <= bound; ++m) {
    if (m > depth_cap) return Verdict::Unknown(depth_cap);
    if (LinkedCylinderBelow(sys, phi, Prefix(x, m), Prefix(y, m), test)) {
      return Verdict::Yes(m);
    }
  }
  return Verdict::No("no linked cylinder pair lies below the graph");
}

Verdict Member(const RefinementSystem& sys, const IdealExpr& sigma,
               const Point& x, const Point& y, std::size_t depth_cap) {
  using K = IdealExpr::Kind;
  if (sigma.kind == K::kUnion || sigma.kind == K::kIntersection) {
    const bool is_union = sigma.kind == K::kUnion;
    bool unknown = false;
    std::size_t depth = 0;
    for (const IdealExpr& part : sigma.parts) {
      Verdict v = Member(sys, part, x, y, depth_cap);
      if (v.yes() && is_union) return v;
      if (v.no() && !is_union) return v;
      if (v.unknown()) {
        unknown = true;
        depth = std::max(depth, v.depth);
      }
    }
    if (unknown) return Verdict::Unknown(depth);
    return is_union ? Verdict::No("no part contains the pair") : Verdict::Yes();
  }
  if (!BaseTest(sigma.mode, x, y)) {
    return Verdict::No(sigma.mode == SetMode::kIdeal ? "not in P" : "not in G");
  }
  switch (sigma.kind) {
    case K::kEmpty:
      return Verdict::No("empty set");
    case K::kFull:
      return Verdict::Yes();
    case K::kFiniteLevel: {
      const MatrixUnitSet& s = *sigma.finite;
      if (s.Contains(Prefix(x, s.level), Prefix(y, s.level))) {
        return Verdict::Yes(s.level);
      }
      return Verdict::No("prefix pair not in the set");
    }
    case K::kStrip:
    case K::kStripPlus:
      if (x < sigma.a || sigma.b < y) return Verdict::Yes();
      if (sigma.kind == K::kStripPlus && x == sigma.a && y == sigma.b) {
        return Verdict::Yes();
      }
      return Verdict::No("a <= x and y <= b");
    case K::kCorner:
      if (x < sigma.a && sigma.t() < y) return Verdict::Yes();
      return Verdict::No("outside the corner");
    case K::kOfBFOpen:
      if (x < EvalBF(sys, *sigma.phi, y)) return Verdict::Yes();
      return Verdict::No("x is not below phi(y)");
    case K::kOfBFClosed:
      return SigmaClosedMember(sys, *sigma.phi, x, y, depth_cap);
    case K::kUnion:
    case K::kIntersection:
      break;
  }
  throw Error(ErrorKind::kInternal, "unhandled ideal expression");
}

std::vector<Point> AnchorPoints(const RefinementSystem& sys,
                                const IdealExpr& sigma) {
  using K = IdealExpr::Kind;
  std::vector<Point> out;
  std::function<void(const IdealExpr&)> walk = [&](const IdealExpr& e) {
    switch (e.kind) {
      case K::kStrip:
      case K::kStripPlus:
      case K::kCorner:
        out.push_back(e.a);
        out.push_back(e.b);
        break;
      case K::kFiniteLevel:
        for (const auto& [u, v] : e.finite->pairs) {
          for (const Word* w : {&u, &v}) {
            out.push_back(Splice(sys, *w, PMin(sys)));
            out.push_back(Splice(sys, *w, PMax(sys)));
            out.push_back(Splice(sys, *w, GenericTail()));
          }
        }
        break;
      case K::kOfBFOpen:
      case K::kOfBFClosed:
        for (const Piece& piece : e.phi->pieces()) {
          out.push_back(piece.span.lo());
          out.push_back(piece.span.hi());
          if (piece.leaf.kind == Leaf::Kind::kConst) {
            out.push_back(piece.leaf.value);
          }
        }
        break;
      case K::kUnion:
      case K::kIntersection:
        for (const IdealExpr& p : e.parts) walk(p);
        break;
      case K::kEmpty:
      case K::kFull:
        break;
    }
  };
  walk(sigma);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void StructuralChecks(const RefinementSystem& sys, const IdealExpr& e,
                      std::vector<Violation>& out) {
  using K = IdealExpr::Kind;
  auto report = [&](const std::string& detail) {
    out.push_back({"ConstructorViolation", detail});
  };
  try {
    switch (e.kind) {
      case K::kStrip:
        CheckPoint(sys, e.a);
        CheckPoint(sys, e.b);
        break;
      case K::kStripPlus:
        CheckPoint(sys, e.a);
        CheckPoint(sys, e.b);
        if (!BaseTest(e.mode, e.a, e.b)) {
          report("strip_plus point (" + FormatPoint(e.a) + ", " +
                 FormatPoint(e.b) + ") is not in " +
                 (e.mode == SetMode::kIdeal ? "P" : "G"));
        }
        break;
      case K::kCorner:
        CheckPoint(sys, e.a);
        CheckPoint(sys, e.b);
        if (!(PMin(sys) < e.a && e.a <= e.b && e.b < PMax(sys))) {
          report("corner needs p_min < a <= t < p_max");
        }
        break;
      case K::kFiniteLevel:
        if (!e.finite) {
          report("finite-level expression without a set");
          break;
        }
        if (e.finite->mode != e.mode) report("finite-level set mode differs");
        CheckPairs(sys, e.finite->level, e.finite->pairs, e.mode);
        break;
      case K::kOfBFOpen:
      case K::kOfBFClosed:
        if (!e.phi) {
          report("boundary-function expression without a function");
        } else if (e.phi->mode() != e.mode) {
          report("boundary function mode differs from expression mode");
        }
        break;
      case K::kUnion:
      case K::kIntersection:
        for (const IdealExpr& p : e.parts) {
          if (p.mode != e.mode) report("parts of mixed mode");
          StructuralChecks(sys, p, out);
        }
        break;
      case K::kEmpty:
      case K::kFull:
        break;
    }
  } catch (const Error& err) {
    report(err.what());
  }
}

}  // namespace

std::vector<Violation> ValidateIdealExpr(const RefinementSystem& sys,
                                         const IdealExpr& sigma,
                                         const SampleOptions& options) {
  std::vector<Violation> out;
  StructuralChecks(sys, sigma, out);
  if (!out.empty()) return out;
  PointSampler sampler(sys, options.seed, AnchorPoints(sys, sigma));
  for (std::size_t i = 0; i < options.samples; ++i) {
    // Find (x, y) in sigma.
    std::optional<std::pair<Point, Point>> inside;
    for (int attempt = 0; attempt < 8 && !inside; ++attempt) {
      Point x = sampler.Random();
      Point y;
      if (sigma.mode == SetMode::kIdeal) {
        y = sampler.Below(4) == 0 ? x : sampler.InOrbitAbove(x);
      } else {
        y = sampler.Below(2) == 0 ? sampler.InOrbitAbove(x)
                                  : sampler.InOrbitBelow(x);
      }
      if (Member(sys, sigma, x, y, options.depth_cap).yes()) {
        inside = {std::move(x), std::move(y)};
      }
    }
    if (!inside) continue;
    const auto& [x, y] = *inside;
    Point w = sampler.Below(4) == 0 ? x : sampler.InOrbitBelow(x);
    Point z = sampler.Below(4) == 0 ? y : sampler.InOrbitAbove(y);
    if (Member(sys, sigma, w, z, options.depth_cap).no()) {
      out.push_back({"IdealPropertyViolation",
                     "w=" + FormatPoint(w) + " x=" + FormatPoint(x) +
                         " y=" + FormatPoint(y) + " z=" + FormatPoint(z)});
      break;
    }
  }
  return out;
}

IdealExpr Combine(CombineOp op, std::vector<IdealExpr> parts) {
  SetMode mode = parts.empty() ? SetMode::kIdeal : parts.front().mode;
  for (const IdealExpr& p : parts) {
    if (p.mode != mode) {
      throw Error(ErrorKind::kMixedModes, "combined expressions differ in mode");
    }
  }
  IdealExpr e;
  e.kind = op == CombineOp::kUnion ? IdealExpr::Kind::kUnion
                                   : IdealExpr::Kind::kIntersection;
  e.mode = mode;
  e.parts = std::move(parts);
  return e;
}

namespace {

class CylinderAnalysis {
 public:
  CylinderAnalysis(const RefinementSystem& sys, const IdealExpr& root)
      : sys_(sys), root_(root), anchors_(AnchorPoints(sys, root)) {
    anchors_.push_back(PMin(sys));
    anchors_.push_back(PMax(sys));
    anchors_.push_back(GenericTail());
  }

  // Every linked pair (u.w, v.w) lies in e.
  bool Contains(const IdealExpr& e, const Word& u, const Word& v) {
    using K = IdealExpr::Kind;
    if (e.kind == K::kIntersection) {
      for (const IdealExpr& p : e.parts) {
        if (!Contains(p, u, v)) return false;
      }
      return true;
    }
    if (e.kind == K::kUnion) return UnionContains(e, u, v, 0);
    if (e.mode == SetMode::kIdeal && v < u) return false;
    const std::size_t n = u.level();
    switch (e.kind) {
      case K::kEmpty:
        return false;
      case K::kFull:
        return true;
      case K::kFiniteLevel: {
        const MatrixUnitSet& s = *e.finite;
        if (n >= s.level) {
          Word pu{DigitList(u.digits.begin(), u.digits.begin() + s.level)};
          Word pv{DigitList(v.digits.begin(), v.digits.begin() + s.level)};
          return s.Contains(pu, pv);
        }
        for (const Word& c : Extensions(sys_, n, s.level - n)) {
          if (!s.Contains(Concat(u, c), Concat(v, c))) return false;
        }
        return true;
      }
      case K::kStrip:
      case K::kStripPlus: {
        const Word pa = Prefix(e.a, n);
        const Word pb = Prefix(e.b, n);
        if (u < pa || pb < v) return true;
        if (u == pa && v == pb) {
          // Only tails w with tail(a) <= w <= tail(b) escape the strip.
          const Point probe = Splice(sys_, u, e.b);
          return e.kind == K::kStrip ? probe < e.a : probe <= e.a;
        }
        return false;
      }
      case K::kCorner:
        return u < Prefix(e.a, n) && Prefix(e.t(), n) < v;
      case K::kOfBFOpen:
        return LinkedCylinderBelow(sys_, *e.phi, u, v, CylinderTest::kStrict);
      case K::kOfBFClosed:
        return LinkedCylinderBelow(sys_, *e.phi, u, v, CylinderTest::kEta);
      case K::kUnion:
      case K::kIntersection:
        break;
    }
    throw Error(ErrorKind::kInternal, "unhandled ideal expression");
  }

 private:
  static constexpr std::size_t kUnionDepth = 10;
  static constexpr std::size_t kUnionNodes = 1u << 14;

  // A compact linked cylinder pair inside a union of open sets is covered by
  // finitely many sub-cylinders, each inside one part.
  bool UnionContains(const IdealExpr& e, const Word& u, const Word& v,
                     std::size_t depth) {
    for (const IdealExpr& p : e.parts) {
      if (Contains(p, u, v)) return true;
    }
    for (const Point& tail : anchors_) {
      const Point x = Splice(sys_, u, tail);
      const Point y = Splice(sys_, v, tail);
      if (Member(sys_, e, x, y).no()) return false;
    }
    if (depth >= kUnionDepth || ++nodes_ > kUnionNodes) {
      throw Error(ErrorKind::kDepthExceeded,
                  "union cover search exceeded its bound at (" +
                      FormatWord(u) + "," + FormatWord(v) + ")");
    }
    for (Digit d = 1; d <= sys_.radix(u.level() + 1); ++d) {
      Word cu = u;
      Word cv = v;
      cu.digits.push_back(d);
      cv.digits.push_back(d);
      if (!UnionContains(e, cu, cv, depth + 1)) return false;
    }
    return true;
  }

  const RefinementSystem& sys_;
  const IdealExpr& root_;
  std::vector<Point> anchors_;
  std::size_t nodes_ = 0;
};

}  // namespace

MatrixUnitSet RestrictToLevel(const RefinementSystem& sys,
                              const IdealExpr& sigma, std::size_t level) {
  if (level == 0) {
    throw Error(ErrorKind::kConstraint, "restriction level must be at least 1");
  }
  MatrixUnitSet out;
  out.level = level;
  out.mode = sigma.mode;
  const std::vector<Word> words = WordsAtLevel(sys, level);
  CylinderAnalysis analysis(sys, sigma);
  for (const Word& u : words) {
    for (const Word& v : words) {
      if (analysis.Contains(sigma, u, v)) out.pairs.insert({u, v});
    }
  }
  return out;
}

}  // namespace boundfn
