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

#include "boundfn/oracle.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "boundfn/boundary.hpp"
#include "boundfn/literal.hpp"

namespace boundfn {

FiniteModel BuildFiniteModel(const RefinementSystem& sys, std::size_t level,
                             std::size_t cap) {
  if (level == 0) throw Error(ErrorKind::kConstraint, "level must be >= 1");
  std::size_t count = 1;
  for (std::size_t n = 1; n <= level; ++n) {
    count *= sys.radix(n);
    if (count > cap) {
      throw Error(ErrorKind::kCapExceeded,
                  "level " + std::to_string(level) + " has more than " +
                      std::to_string(cap) + " words");
    }
  }
  FiniteModel model{sys, level, {}, {}};
  model.words.reserve(count);
  DigitList digits(level, 1);
  for (std::size_t i = 0; i < count; ++i) {
    model.words.push_back(Word{digits});
    // Odometer step, last position fastest.
    for (std::size_t n = level; n >= 1; --n) {
      if (digits[n - 1] < sys.radix(n)) {
        ++digits[n - 1];
        break;
      }
      digits[n - 1] = 1;
    }
  }
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v = u; v < count; ++v) model.p_pairs.emplace_back(u, v);
  }
  return model;
}

std::size_t WordIndex(const FiniteModel& model, const Word& w) {
  if (w.digits.size() != model.level) {
    throw Error(ErrorKind::kLevelMismatch,
                "word of length " + std::to_string(w.digits.size()) +
                    " in a level-" + std::to_string(model.level) + " model");
  }
  // Mixed-radix value of the word, most significant digit first.
  std::size_t index = 0;
  for (std::size_t n = 1; n <= model.level; ++n) {
    index = index * model.sys.radix(n) + (w.digits[n - 1] - 1);
  }
  return index;
}

std::set<WordPair> BruteClose(const FiniteModel& model,
                              const std::set<WordPair>& generators) {
  std::set<WordPair> out;
  for (const auto& [u, v] : generators) {
    const std::size_t ui = WordIndex(model, u);
    const std::size_t vi = WordIndex(model, v);
    for (std::size_t a = 0; a <= ui; ++a) {
      for (std::size_t b = vi; b < model.words.size(); ++b) {
        out.insert({model.words[a], model.words[b]});
      }
    }
  }
  return out;
}

bool BruteIsClosed(const FiniteModel& model, const std::set<WordPair>& pairs) {
  return BruteClose(model, pairs) == pairs;
}

std::optional<Word> BruteBoundary(const FiniteModel& model,
                                  const MatrixUnitSet& s, const Word& v) {
  if (s.level != model.level) {
    throw Error(ErrorKind::kLevelMismatch, "set and model levels differ");
  }
  const std::size_t vi = WordIndex(model, v);
  std::optional<Word> best;
  for (std::size_t ui = 0; ui < model.words.size(); ++ui) {
    if (s.pairs.count({model.words[ui], model.words[vi]})) best = model.words[ui];
  }
  return best;
}

std::vector<Point> SamplePoints(const RefinementSystem& sys, std::uint64_t seed,
                                std::size_t count, std::size_t max_preamble,
                                std::size_t max_period) {
  if (max_preamble == 0 || max_period == 0) {
    throw Error(ErrorKind::kConstraint, "sampling bounds must be >= 1");
  }
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t n) { return rng() % n; };
  Digit min_radix = sys.radix(1);
  for (std::size_t n = 1; n <= max_preamble + sys.prefix().size() + sys.cycle().size(); ++n) {
    min_radix = std::min(min_radix, sys.radix(n));
  }
  auto random_point = [&](std::size_t pre_len, const DigitList& period) {
    DigitList pre(pre_len);
    for (std::size_t n = 1; n <= pre_len; ++n) {
      pre[n - 1] = static_cast<Digit>(1 + below(sys.radix(n)));
    }
    return CanonicalizePoint(sys, std::move(pre), period);
  };
  auto random_period = [&]() {
    DigitList period(1 + below(max_period));
    for (Digit& d : period) d = static_cast<Digit>(1 + below(min_radix));
    return period;
  };

  std::vector<Point> out = {PMin(sys), PMax(sys),
                            Splice(sys, Word{{1}}, PMax(sys)),
                            Splice(sys, Word{{sys.radix(1)}}, PMin(sys))};
  // An orbit-correlated pair: one period, two preambles of equal length.
  const DigitList shared = random_period();
  const std::size_t len = 1 + below(max_preamble);
  out.push_back(random_point(len, shared));
  out.push_back(random_point(len, shared));
  while (out.size() < count) {
    out.push_back(random_point(below(max_preamble + 1), random_period()));
  }
  return out;
}

namespace {

IdealExpr RandomFinite(const RefinementSystem& sys, PointSampler& sampler,
                       SetMode mode) {
  std::size_t level = 1 + sampler.Below(3);
  auto word_count = [&](std::size_t n) {
    std::size_t c = 1;
    for (std::size_t i = 1; i <= n; ++i) c *= sys.radix(i);
    return c;
  };
  while (level > 1 && word_count(level) > 64) --level;
  std::set<WordPair> gens;
  const std::size_t n = 1 + sampler.Below(3);
  for (std::size_t i = 0; i < n; ++i) {
    Word u = sampler.RandomWord(level);
    Word v = sampler.RandomWord(level);
    if (mode == SetMode::kIdeal && v < u) std::swap(u, v);
    gens.insert({u, v});
  }
  return IdealExpr::FiniteLevel(CloseFiniteLevel(sys, level, gens, mode));
}

IdealExpr RandomTwoPoint(const RefinementSystem& sys, PointSampler& sampler,
                         SetMode mode, int which) {
  Point a = sampler.Random();
  if (which == 0) {
    Point b = sampler.Below(2) == 0 ? sampler.Random() : sampler.InOrbitAbove(a);
    return IdealExpr::Strip(std::move(a), std::move(b), mode);
  }
  if (which == 1) {
    Point b = mode == SetMode::kIdeal ? sampler.InOrbitAbove(a) : sampler.InOrbit(a);
    if (mode == SetMode::kIdeal ? PTest(a, b) : OrbitTest(a, b)) {
      return IdealExpr::StripPlus(std::move(a), std::move(b), mode);
    }
    return IdealExpr::Strip(std::move(a), std::move(b), mode);
  }
  Point t = sampler.Below(2) == 0 ? sampler.Random() : sampler.InOrbitAbove(a);
  if (t < a) std::swap(a, t);
  if (PMin(sys) < a && t < PMax(sys)) {
    return IdealExpr::Corner(sys, std::move(a), std::move(t), mode);
  }
  return IdealExpr::Strip(std::move(a), std::move(t), mode);
}

}  // namespace

IdealExpr RandomIdealExpr(const RefinementSystem& sys, PointSampler& sampler,
                          SetMode mode, int depth) {
  const std::uint64_t r = sampler.Below(depth > 0 ? 12 : 8);
  switch (r) {
    case 0:
      return sampler.Below(2) == 0 ? IdealExpr::Empty(mode) : IdealExpr::Full(mode);
    case 1: return RandomFinite(sys, sampler, mode);
    case 2:
    case 3: return RandomTwoPoint(sys, sampler, mode, 0);
    case 4:
    case 5: return RandomTwoPoint(sys, sampler, mode, 1);
    case 6:
    case 7: return RandomTwoPoint(sys, sampler, mode, 2);
    case 8: return IdealExpr::OfBFOpen(RandomBF(sys, sampler, mode, depth - 1));
    case 9: return IdealExpr::OfBFClosed(RandomBF(sys, sampler, mode, depth - 1));
    default: {
      std::vector<IdealExpr> parts;
      parts.push_back(RandomIdealExpr(sys, sampler, mode, depth - 1));
      parts.push_back(RandomIdealExpr(sys, sampler, mode, depth - 1));
      return Combine(r == 10 ? CombineOp::kUnion : CombineOp::kIntersection,
                     std::move(parts));
    }
  }
}

PiecewiseBF RandomBF(const RefinementSystem& sys, PointSampler& sampler,
                     SetMode mode, int depth) {
  PiecewiseBF phi = BoundaryOf(sys, RandomIdealExpr(sys, sampler, mode, depth));
  switch (sampler.Below(4)) {
    case 0: return BFMinus(sys, phi);
    case 1:
      try {
        return BFPlus(sys, phi);
      } catch (const Error&) {
        return phi;
      }
    default: return phi;
  }
}

std::uint64_t InstanceSeed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string ReportToJson(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["system"] = report.system;
  j["seed"] = report.seed;
  j["budget"] = report.budget;
  j["instances"] = report.instances;
  j["checks"] = report.checks;
  j["passed"] = report.passed();
  j["violations"] = nlohmann::ordered_json::array();
  for (const SuiteViolation& v : report.violations) {
    nlohmann::ordered_json item;
    item["index"] = v.index;
    item["kind"] = v.kind;
    item["witness"] = v.witness;
    j["violations"].push_back(std::move(item));
  }
  return j.dump(2);
}

std::string ReportSummary(const SuiteReport& report) {
  std::ostringstream out;
  out << report.suite << " [" << report.system << "] seed=" << report.seed
      << " instances=" << report.instances << " checks=" << report.checks
      << " violations=" << report.violations.size()
      << (report.passed() ? " PASS" : " FAIL");
  for (std::size_t i = 0; i < report.violations.size() && i < 5; ++i) {
    const SuiteViolation& v = report.violations[i];
    out << "\n  #" << v.index << " " << v.kind << ": " << v.witness;
  }
  return out.str();
}

}  // namespace boundfn
