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

#include "boundfn/literal.hpp"

#include <cctype>
#include <charconv>
#include <set>

namespace boundfn {

namespace {

bool IsNameStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

bool IsDigitChar(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
}

DigitList ParseDigitRun(std::string_view run, bool dotted, std::size_t column) {
  DigitList out;
  auto fail = [&]() -> DigitList {
    throw Error(ErrorKind::kParse, "column " + std::to_string(column) +
                                       ": bad digit string '" +
                                       std::string(run) + "'");
  };
  if (!dotted) {
    for (char c : run) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
      out.push_back(static_cast<Digit>(c - '0'));
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= run.size()) {
    std::size_t end = run.find('.', start);
    if (end == std::string_view::npos) end = run.size();
    std::string_view token = run.substr(start, end - start);
    if (!token.empty()) {
      unsigned value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() || value > 0xFFFF) {
        return fail();
      }
      out.push_back(static_cast<Digit>(value));
    }
    start = end + 1;
  }
  return out;
}

class Parser {
 public:
  Parser(const RefinementSystem& sys, std::string_view text,
         const Bindings* bindings)
      : sys_(sys), text_(text), bindings_(bindings) {}

  void Finish() {
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected trailing input");
  }

  Point ParsePointValue() {
    SkipSpace();
    if (pos_ < text_.size() && IsNameStart(text_[pos_])) {
      const std::size_t at = pos_;
      std::string name = Name();
      if (name == "pmin") return PMin(sys_);
      if (name == "pmax") return PMax(sys_);
      if (bindings_) {
        auto it = bindings_->points.find(name);
        if (it != bindings_->points.end()) return it->second;
      }
      Unresolved("point", name, at);
    }
    const std::size_t at = pos_;
    std::string_view token = Token([](char c) { return IsDigitChar(c) || c == '|'; });
    const std::size_t bar = token.find('|');
    if (bar == std::string_view::npos || token.find('|', bar + 1) != std::string_view::npos) {
      pos_ = at;
      Fail("expected a point literal 'preamble|period'");
    }
    const bool dotted = token.find('.') != std::string_view::npos;
    DigitList pre = ParseDigitRun(token.substr(0, bar), dotted, at + 1);
    DigitList per = ParseDigitRun(token.substr(bar + 1), dotted, at + bar + 2);
    if (per.empty()) {
      pos_ = at;
      Fail("empty period");
    }
    return CanonicalizePoint(sys_, std::move(pre), std::move(per));
  }

  Word ParseWordValue() {
    SkipSpace();
    const std::size_t at = pos_;
    if (pos_ < text_.size() && text_[pos_] == 'e') {
      ++pos_;
      return Word{};
    }
    std::string_view token = Token(IsDigitChar);
    if (token.empty()) Fail("expected a word");
    Word w{ParseDigitRun(token, token.find('.') != std::string_view::npos, at + 1)};
    CheckWord(sys_, w);
    return w;
  }

  IdealExpr ParseIdeal() {
    SkipSpace();
    const std::size_t at = pos_;
    if (pos_ >= text_.size() || !IsNameStart(text_[pos_])) {
      Fail("expected an ideal expression");
    }
    const std::string name = Name();
    if (name == "empty" || name == "full") {
      SetMode mode = SetMode::kIdeal;
      if (Peek('(')) {
        Expect('(');
        Keyword("mode");
        mode = ParseMode();
        Expect(')');
      }
      return name == "empty" ? IdealExpr::Empty(mode) : IdealExpr::Full(mode);
    }
    if (name == "finite") return ParseFinite();
    if (name == "strip" || name == "strip_plus" || name == "corner") {
      return ParseTwoPoint(name);
    }
    if (name == "open" || name == "closed") {
      Expect('(');
      PiecewiseBF phi = ParseBFValue();
      Expect(')');
      return name == "open" ? IdealExpr::OfBFOpen(std::move(phi))
                            : IdealExpr::OfBFClosed(std::move(phi));
    }
    if (name == "union" || name == "intersection") {
      Expect('(');
      std::vector<IdealExpr> parts;
      parts.push_back(ParseIdeal());
      while (TryConsume(',')) parts.push_back(ParseIdeal());
      Expect(')');
      return Combine(name == "union" ? CombineOp::kUnion : CombineOp::kIntersection,
                     std::move(parts));
    }
    if (bindings_) {
      auto it = bindings_->ideals.find(name);
      if (it != bindings_->ideals.end()) return it->second;
    }
    Unresolved("ideal expression", name, at);
  }

  PiecewiseBF ParseBFValue() {
    SkipSpace();
    SetMode mode = SetMode::kIdeal;
    if (pos_ < text_.size() && IsNameStart(text_[pos_])) {
      const std::size_t at = pos_;
      std::string name = Name();
      if (name == "module" && Peek(':')) {
        Expect(':');
        mode = SetMode::kModule;
      } else {
        if (bindings_) {
          auto it = bindings_->bfs.find(name);
          if (it != bindings_->bfs.end()) return it->second;
        }
        Unresolved("boundary function", name, at);
      }
    }
    Expect('{');
    std::vector<Piece> pieces;
    do {
      pieces.push_back(ParsePiece());
    } while (TryConsume(';'));
    Expect('}');
    return PiecewiseBF::Make(sys_, std::move(pieces), mode);
  }

 private:
  [[noreturn]] void Fail(const std::string& message) const {
    throw Error(ErrorKind::kParse,
                "column " + std::to_string(pos_ + 1) + ": " + message);
  }

  [[noreturn]] void Unresolved(const char* what, const std::string& name,
                               std::size_t at) const {
    throw Error(ErrorKind::kUnresolvedName, "column " + std::to_string(at + 1) +
                                                ": unknown " + what + " '" +
                                                name + "'");
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Peek(char c) {
    SkipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool TryConsume(char c) {
    if (!Peek(c)) return false;
    ++pos_;
    return true;
  }

  void Expect(char c) {
    if (!TryConsume(c)) Fail(std::string("expected '") + c + "'");
  }

  void ExpectText(std::string_view s) {
    SkipSpace();
    if (text_.substr(pos_, s.size()) != s) Fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }

  template <typename Pred>
  std::string_view Token(Pred pred) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::string Name() {
    SkipSpace();
    if (pos_ >= text_.size() || !IsNameStart(text_[pos_])) Fail("expected a name");
    return std::string(Token(IsNameChar));
  }

  void Keyword(const char* key) {
    const std::size_t at = pos_;
    if (Name() != key) {
      pos_ = at;
      SkipSpace();
      Fail(std::string("expected '") + key + "='");
    }
    Expect('=');
  }

  SetMode ParseMode() {
    const std::string value = Name();
    if (value == "module") return SetMode::kModule;
    if (value == "ideal") return SetMode::kIdeal;
    Fail("mode must be 'ideal' or 'module'");
  }

  IdealExpr ParseFinite() {
    Expect('(');
    Keyword("level");
    SkipSpace();
    std::string_view digits = Token([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
    if (digits.empty()) Fail("expected a level");
    std::size_t level = 0;
    std::from_chars(digits.data(), digits.data() + digits.size(), level);
    Expect(',');
    Keyword("pairs");
    Expect('[');
    std::set<WordPair> pairs;
    if (!Peek(']')) {
      do {
        Expect('(');
        Word u = ParseWordValue();
        Expect(',');
        Word v = ParseWordValue();
        Expect(')');
        pairs.insert({std::move(u), std::move(v)});
      } while (TryConsume(','));
    }
    Expect(']');
    SetMode mode = SetMode::kIdeal;
    if (TryConsume(',')) {
      Keyword("mode");
      mode = ParseMode();
    }
    Expect(')');
    return IdealExpr::FiniteLevel(CloseFiniteLevel(sys_, level, pairs, mode));
  }

  IdealExpr ParseTwoPoint(const std::string& name) {
    const bool corner = name == "corner";
    Expect('(');
    Keyword("a");
    Point a = ParsePointValue();
    Expect(',');
    Keyword(corner ? "t" : "b");
    Point b = ParsePointValue();
    SetMode mode = SetMode::kIdeal;
    if (TryConsume(',')) {
      Keyword("mode");
      mode = ParseMode();
    }
    Expect(')');
    if (corner) return IdealExpr::Corner(sys_, std::move(a), std::move(b), mode);
    if (name == "strip_plus") {
      return IdealExpr::StripPlus(std::move(a), std::move(b), mode);
    }
    return IdealExpr::Strip(std::move(a), std::move(b), mode);
  }

  Piece ParsePiece() {
    SkipSpace();
    bool lo_closed = false;
    if (TryConsume('[')) {
      lo_closed = true;
    } else if (!TryConsume('(')) {
      Fail("expected '[' or '('");
    }
    Point lo = ParsePointValue();
    Expect(',');
    Point hi = ParsePointValue();
    bool hi_closed = false;
    if (TryConsume(']')) {
      hi_closed = true;
    } else if (!TryConsume(')')) {
      Fail("expected ']' or ')'");
    }
    ExpectText("->");
    const std::string leaf = Name();
    Leaf out;
    if (leaf == "id") {
      out = Leaf::Identity();
    } else if (leaf == "id-") {
      out = Leaf::IdentityMinus();
    } else if (leaf == "const") {
      Expect('(');
      out = Leaf::Const(ParsePointValue());
      Expect(')');
    } else {
      Fail("expected 'id', 'id-' or 'const(...)'");
    }
    return {OrderInterval::Make(sys_, std::move(lo), lo_closed, std::move(hi), hi_closed),
            std::move(out)};
  }

  const RefinementSystem& sys_;
  std::string_view text_;
  const Bindings* bindings_;
  std::size_t pos_ = 0;
};

std::string ModeSuffix(SetMode mode) {
  return mode == SetMode::kModule ? ", mode=module" : "";
}

}  // namespace

RefinementSystem ParseSystem(std::string_view text) {
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
    throw Error(ErrorKind::kParse, "column 1: a system literal is 'prefix;cycle'");
  }
  auto list = [&](std::string_view run, std::size_t column) {
    // Radices may exceed 9, so system literals are always dotted.
    return ParseDigitRun(run, true, column);
  };
  DigitList prefix = list(text.substr(0, semi), 1);
  DigitList cycle = list(text.substr(semi + 1), semi + 2);
  return RefinementSystem(std::move(prefix), std::move(cycle));
}

std::string FormatSystem(const RefinementSystem& sys) {
  auto join = [](const DigitList& ds) {
    std::string out;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (i > 0) out += '.';
      out += std::to_string(ds[i]);
    }
    return out;
  };
  return join(sys.prefix()) + ";" + join(sys.cycle());
}

Point ParsePoint(const RefinementSystem& sys, std::string_view text,
                 const Bindings* bindings) {
  Parser p(sys, text, bindings);
  Point out = p.ParsePointValue();
  p.Finish();
  return out;
}

Word ParseWord(const RefinementSystem& sys, std::string_view text) {
  Parser p(sys, text, nullptr);
  Word out = p.ParseWordValue();
  p.Finish();
  return out;
}

IdealExpr ParseIdealExpr(const RefinementSystem& sys, std::string_view text,
                         const Bindings* bindings) {
  Parser p(sys, text, bindings);
  IdealExpr out = p.ParseIdeal();
  p.Finish();
  return out;
}

PiecewiseBF ParseBF(const RefinementSystem& sys, std::string_view text,
                    const Bindings* bindings) {
  Parser p(sys, text, bindings);
  PiecewiseBF out = p.ParseBFValue();
  p.Finish();
  return out;
}

std::string FormatIdealExpr(const IdealExpr& sigma) {
  using K = IdealExpr::Kind;
  switch (sigma.kind) {
    case K::kEmpty:
    case K::kFull: {
      std::string out = sigma.kind == K::kEmpty ? "empty" : "full";
      if (sigma.mode == SetMode::kModule) out += "(mode=module)";
      return out;
    }
    case K::kFiniteLevel: {
      std::string out = "finite(level=" + std::to_string(sigma.finite->level) + ", pairs=[";
      bool first = true;
      for (const auto& [u, v] : sigma.finite->pairs) {
        if (!first) out += ", ";
        first = false;
        out += "(" + FormatWord(u) + "," + FormatWord(v) + ")";
      }
      return out + "]" + ModeSuffix(sigma.mode) + ")";
    }
    case K::kStrip:
    case K::kStripPlus:
    case K::kCorner:
      return std::string(IdealKindName(sigma.kind)) + "(a=" + FormatPoint(sigma.a) +
             (sigma.kind == K::kCorner ? ", t=" : ", b=") + FormatPoint(sigma.b) +
             ModeSuffix(sigma.mode) + ")";
    case K::kOfBFOpen:
    case K::kOfBFClosed:
      return std::string(IdealKindName(sigma.kind)) + "(" + FormatBF(*sigma.phi) + ")";
    case K::kUnion:
    case K::kIntersection: {
      std::string out = std::string(IdealKindName(sigma.kind)) + "(";
      for (std::size_t i = 0; i < sigma.parts.size(); ++i) {
        if (i > 0) out += ", ";
        out += FormatIdealExpr(sigma.parts[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

}  // namespace boundfn
