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

#include "boundfn/scenario.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "boundfn/boundary.hpp"
#include "boundfn/irreducible.hpp"
#include "boundfn/literal.hpp"
#include "boundfn/oracle.hpp"

namespace boundfn {

namespace {

// An input error: reported with the scenario line and exit code 2.
struct InputError {
  std::size_t line;
  std::size_t column;
  std::string message;
};

struct Token {
  std::string text;
  std::size_t column;  // 1-based within the line
};

// Splits on spaces outside (), [] and {}.  Intervals such as "[a, b)" only
// occur inside braces, so brackets are balanced only by kind.
std::vector<Token> Tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  int braces = 0;
  int parens = 0;
  std::size_t start = std::string_view::npos;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    const char c = i < line.size() ? line[i] : ' ';
    if (braces == 0 && parens == 0 && std::isspace(static_cast<unsigned char>(c))) {
      if (start != std::string_view::npos) {
        out.push_back({std::string(line.substr(start, i - start)), start + 1});
        start = std::string_view::npos;
      }
      continue;
    }
    if (start == std::string_view::npos) start = i;
    if (c == '{') ++braces;
    if (c == '}') --braces;
    if (braces == 0 && c == '(') ++parens;
    if (braces == 0 && c == ')') --parens;
    if (braces < 0 || parens < 0) throw InputError{line_no, i + 1, "unbalanced brackets"};
  }
  if (braces != 0 || parens != 0) {
    throw InputError{line_no, line.size(), "unbalanced brackets"};
  }
  return out;
}

// Library parse errors carry "column N" relative to the literal.
InputError Relocate(const Error& e, std::size_t line, std::size_t offset) {
  std::string msg = e.what();
  std::size_t column = offset;
  if (msg.rfind("column ", 0) == 0) {
    const std::size_t colon = msg.find(':');
    column = offset + std::stoul(msg.substr(7, colon - 7)) - 1;
    msg = msg.substr(colon + 2);
  }
  return {line, column, std::string(ErrorKindName(e.kind())) + ": " + msg};
}

class Runner {
 public:
  Runner(const ScenarioOptions& options, std::ostream& out)
      : options_(options), out_(out) {}

  ScenarioResult Run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    try {
      while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') continue;
        Line(line, line_no);
      }
    } catch (const InputError& e) {
      result_.exit_code = 2;
      result_.error = "line " + std::to_string(e.line) + ", column " +
                      std::to_string(e.column) + ": " + e.message;
      out_ << "error: " << result_.error << "\n";
      return result_;
    }
    for (const CommandResult& r : result_.results) {
      if (!r.ok) result_.exit_code = 1;
    }
    return result_;
  }

 private:
  // What a command produced, typed so that expectations compare as objects.
  struct Value {
    enum class Kind { kText, kPoint, kBF, kClass } kind = Kind::kText;
    std::string text;
    std::optional<Point> point;
    std::optional<PiecewiseBF> bf;
    bool failed = false;  // a suite or example group that did not pass
  };

  const RefinementSystem& Sys(std::size_t line) const {
    if (!sys_) throw InputError{line, 1, "no system line before first use"};
    return *sys_;
  }

  void Line(std::string_view line, std::size_t line_no) {
    std::vector<Token> tokens = Tokenize(line, line_no);
    const std::string& head = tokens[0].text;
    if (head == "system") {
      if (tokens.size() != 2) throw InputError{line_no, tokens[0].column, "usage: system LITERAL"};
      if (sys_) throw InputError{line_no, 1, "system given twice"};
      const std::string text = options_.system.value_or(tokens[1].text);
      try {
        sys_ = ParseSystem(text);
      } catch (const Error& e) {
        throw Relocate(e, line_no, options_.system ? 1 : tokens[1].column);
      }
      return;
    }
    if (head == "point" || head == "ideal" || head == "bf") {
      Declare(line, tokens, line_no);
      return;
    }
    // Split off the expectation.
    std::optional<std::string> expected;
    std::size_t expected_column = 0;
    std::size_t arrow_column = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].text != "=>") continue;
      arrow_column = tokens[i].column;
      if (i + 1 >= tokens.size()) throw InputError{line_no, tokens[i].column, "missing expected value"};
      expected_column = tokens[i + 1].column;
      expected = std::string(line.substr(expected_column - 1));
      while (!expected->empty() && std::isspace(static_cast<unsigned char>(expected->back()))) {
        expected->pop_back();
      }
      tokens.resize(i);
      break;
    }
    const std::size_t end = expected ? arrow_column - 1 : line.size();
    std::string command(line.substr(tokens[0].column - 1, end - tokens[0].column + 1));
    while (!command.empty() && std::isspace(static_cast<unsigned char>(command.back()))) command.pop_back();

    const Value value = Execute(tokens, line_no);
    CommandResult r;
    r.line = line_no;
    r.command = command;
    r.output = value.text;
    r.expected = expected;
    r.ok = !value.failed;
    if (expected) r.ok = r.ok && Matches(value, *expected, line_no, expected_column);
    out_ << (r.ok ? "" : "FAILED ") << command << " -> " << value.text;
    if (expected && !r.ok) out_ << " (expected " << *expected << ")";
    out_ << "\n";
    result_.results.push_back(std::move(r));
  }

  void Declare(std::string_view line, const std::vector<Token>& tokens,
               std::size_t line_no) {
    const std::string& kind = tokens[0].text;
    if (tokens.size() < 4 || (tokens[2].text != "=" && tokens[2].text != ":=")) {
      throw InputError{line_no, tokens[0].column, "usage: " + kind + " NAME = LITERAL"};
    }
    const std::string& name = tokens[1].text;
    if (bindings_.points.count(name) || bindings_.ideals.count(name) ||
        bindings_.bfs.count(name) || name == "pmin" || name == "pmax") {
      throw InputError{line_no, tokens[1].column, "name '" + name + "' is already bound"};
    }
    const RefinementSystem& sys = Sys(line_no);
    if (tokens[2].text == ":=") {
      const std::vector<Token> rest(tokens.begin() + 3, tokens.end());
      const Value v = Execute(rest, line_no);
      if (kind == "point" && v.point) {
        bindings_.points.emplace(name, *v.point);
      } else if (kind == "bf" && v.bf) {
        bindings_.bfs.emplace(name, *v.bf);
      } else {
        throw InputError{line_no, tokens[3].column,
                         "command does not produce a " + kind};
      }
      return;
    }
    const std::size_t column = tokens[3].column;
    const std::string_view literal = line.substr(column - 1);
    try {
      if (kind == "point") {
        bindings_.points.emplace(name, ParsePoint(sys, Trim(literal), &bindings_));
      } else if (kind == "ideal") {
        bindings_.ideals.emplace(name, ParseIdealExpr(sys, Trim(literal), &bindings_));
      } else {
        bindings_.bfs.emplace(name, ParseBF(sys, Trim(literal), &bindings_));
      }
    } catch (const Error& e) {
      throw Relocate(e, line_no, column);
    }
  }

  static std::string_view Trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

  Point PointArg(const Token& t, std::size_t line) {
    try {
      return ParsePoint(Sys(line), t.text, &bindings_);
    } catch (const Error& e) {
      throw Relocate(e, line, t.column);
    }
  }
  IdealExpr IdealArg(const Token& t, std::size_t line) {
    try {
      return ParseIdealExpr(Sys(line), t.text, &bindings_);
    } catch (const Error& e) {
      throw Relocate(e, line, t.column);
    }
  }
  PiecewiseBF BFArg(const Token& t, std::size_t line) {
    try {
      return ParseBF(Sys(line), t.text, &bindings_);
    } catch (const Error& e) {
      throw Relocate(e, line, t.column);
    }
  }

  static void Arity(const std::vector<Token>& t, std::size_t n, std::size_t line,
                    const char* usage) {
    if (t.size() != n) throw InputError{line, t[0].column, std::string("usage: ") + usage};
  }

  static Value Text(std::string s) {
    Value v;
    v.text = std::move(s);
    return v;
  }
  static Value OfPoint(const Point& p) {
    Value v;
    v.kind = Value::Kind::kPoint;
    v.text = FormatPoint(p);
    v.point = p;
    return v;
  }
  static Value OfBF(const PiecewiseBF& phi) {
    Value v;
    v.kind = Value::Kind::kBF;
    v.text = FormatBF(phi);
    v.bf = phi;
    return v;
  }
  static std::string VerdictText(const Verdict& v) {
    return v.yes() ? "yes" : v.no() ? "no" : "unknown";
  }

  Value Execute(const std::vector<Token>& t, std::size_t line) {
    const std::string& cmd = t[0].text;
    try {
      return Dispatch(t, line);
    } catch (const InputError&) {
      throw;
    } catch (const Error& e) {
      // Constraint failures of well-formed input are input errors too.
      throw InputError{line, t[0].column,
                       cmd + ": " + ErrorKindName(e.kind()) + ": " + e.what()};
    }
  }

  Value Dispatch(const std::vector<Token>& t, std::size_t line) {
    const std::string& cmd = t[0].text;
    if (cmd == "show") {
      Arity(t, 2, line, "show BF");
      return OfBF(BFArg(t[1], line));
    }
    if (cmd == "eval") {
      Arity(t, 3, line, "eval BF POINT");
      return OfPoint(EvalBF(Sys(line), BFArg(t[1], line), PointArg(t[2], line)));
    }
    if (cmd == "member") {
      Arity(t, 4, line, "member IDEAL POINT POINT");
      return Text(VerdictText(Member(Sys(line), IdealArg(t[1], line), PointArg(t[2], line),
                                     PointArg(t[3], line), options_.depth_cap)));
    }
    if (cmd == "boundary") {
      Arity(t, 2, line, "boundary IDEAL");
      return OfBF(BoundaryOf(Sys(line), IdealArg(t[1], line)));
    }
    if (cmd == "minus") {
      Arity(t, 2, line, "minus BF");
      return OfBF(BFMinus(Sys(line), BFArg(t[1], line)));
    }
    if (cmd == "plus") {
      Arity(t, 2, line, "plus BF");
      return OfBF(BFPlus(Sys(line), BFArg(t[1], line), options_.depth_cap));
    }
    if (cmd == "lattice") {
      Arity(t, 4, line, "lattice join|meet BF BF");
      if (t[1].text != "join" && t[1].text != "meet") {
        throw InputError{line, t[1].column, "expected join or meet"};
      }
      const LatticeOp op = t[1].text == "join" ? LatticeOp::kJoin : LatticeOp::kMeet;
      return OfBF(BFLattice(op, Sys(line), BFArg(t[2], line), BFArg(t[3], line)));
    }
    if (cmd == "validate") {
      Arity(t, 2, line, "validate BF");
      auto v = ValidateBF(Sys(line), BFArg(t[1], line));
      return Text(v.empty() ? "ok" : v[0].kind);
    }
    if (cmd == "classify") {
      Arity(t, 3, line, "classify meet|join|meet-ideal|join-ideal ARG");
      Value v;
      v.kind = Value::Kind::kClass;
      const std::string& how = t[1].text;
      if (how == "meet" || how == "join") {
        const PiecewiseBF phi = BFArg(t[2], line);
        const BFClass c =
            how == "meet" ? ClassifyMeetBF(Sys(line), phi) : ClassifyJoinBF(Sys(line), phi);
        if (c.irreducible) {
          v.text = std::string("irreducible ") + FormTagName(c.form);
          if (c.a) v.text += " a=" + FormatPoint(*c.a);
          if (c.b) v.text += " b=" + FormatPoint(*c.b);
        } else {
          v.text = "reducible psi1=" + FormatBF(*c.psi1) + " psi2=" + FormatBF(*c.psi2);
        }
        return v;
      }
      if (how == "meet-ideal" || how == "join-ideal") {
        const IdealExpr sigma = IdealArg(t[2], line);
        const IdealClassification c = how == "meet-ideal"
                                          ? ClassifyMeetIdeal(Sys(line), sigma)
                                          : ClassifyJoinIdeal(Sys(line), sigma);
        v.text = IdealClassName(c.verdict);
        for (const IdealExpr& part : c.decomposition) v.text += " " + FormatIdealExpr(part);
        return v;
      }
      throw InputError{line, t[1].column, "expected meet, join, meet-ideal or join-ideal"};
    }
    if (cmd == "equiv") {
      Arity(t, 3, line, "equiv BF BF");
      return Text(BFEquiv(Sys(line), BFArg(t[1], line), BFArg(t[2], line)) ? "true" : "false");
    }
    if (cmd == "sandwich") {
      Arity(t, 3, line, "sandwich IDEAL BF");
      SampleOptions sampling;
      sampling.seed = options_.seed.value_or(1);
      sampling.depth_cap = options_.depth_cap;
      return Text(VerdictText(
          SandwichCheck(Sys(line), IdealArg(t[1], line), BFArg(t[2], line), sampling)));
    }
    if (cmd == "suite") return Suite(t, line);
    if (cmd == "paper-examples") {
      Arity(t, 2, line, "paper-examples section2|section3|all");
      if (t[1].text != "section2" && t[1].text != "section3" && t[1].text != "all") {
        throw InputError{line, t[1].column, "unknown example group '" + t[1].text + "'"};
      }
      std::ostringstream sink;
      const ScenarioResult r = RunPaperExamples(t[1].text, options_, sink);
      Value v = Text(r.exit_code == 0 ? "pass" : "fail");
      v.failed = r.exit_code != 0;
      if (v.failed) out_ << sink.str();
      return v;
    }
    throw InputError{line, t[0].column, "unknown command '" + cmd + "'"};
  }

  Value Suite(const std::vector<Token>& t, std::size_t line) {
    if (t.size() < 2) throw InputError{line, t[0].column, "usage: suite NAME|all [seed=N] [budget=N]"};
    SuiteOptions so;
    so.seed = options_.seed.value_or(1);
    so.budget = options_.budget.value_or(0);
    so.depth_cap = options_.depth_cap;
    for (std::size_t i = 2; i < t.size(); ++i) {
      const std::string& arg = t[i].text;
      const std::size_t eq = arg.find('=');
      const std::string key = arg.substr(0, eq);
      std::uint64_t n = 0;
      try {
        if (eq == std::string::npos) throw std::invalid_argument(arg);
        n = std::stoull(arg.substr(eq + 1));
      } catch (const std::exception&) {
        throw InputError{line, t[i].column, "expected seed=N or budget=N"};
      }
      if (key == "seed") {
        so.seed = n;
      } else if (key == "budget") {
        so.budget = n;
      } else {
        throw InputError{line, t[i].column, "unknown suite option '" + key + "'"};
      }
    }
    std::vector<std::string> names;
    if (t[1].text == "all") {
      names = SuiteNames();
    } else if (IsSuiteName(t[1].text)) {
      names = {t[1].text};
    } else {
      throw InputError{line, t[1].column, "unknown suite '" + t[1].text + "'"};
    }
    bool passed = true;
    for (const std::string& name : names) {
      const SuiteReport r = RunSuite(name, Sys(line), so);
      out_ << "  " << ReportSummary(r) << "\n";
      passed = passed && r.passed();
    }
    Value v = Text(passed ? "pass" : "fail");
    v.failed = !passed;
    return v;
  }

  bool Matches(const Value& v, const std::string& expected, std::size_t line,
               std::size_t column) {
    try {
      switch (v.kind) {
        case Value::Kind::kPoint:
          return ParsePoint(*sys_, expected, &bindings_) == *v.point;
        case Value::Kind::kBF:
          return ParseBF(*sys_, expected, &bindings_) == *v.bf;
        case Value::Kind::kClass:
          return v.text == expected || v.text.rfind(expected + " ", 0) == 0;
        case Value::Kind::kText:
          return v.text == expected;
      }
    } catch (const Error& e) {
      throw Relocate(e, line, column);
    }
    return false;
  }

  const ScenarioOptions& options_;
  std::ostream& out_;
  std::optional<RefinementSystem> sys_;
  Bindings bindings_;
  ScenarioResult result_;
};

struct Fixture {
  const char* name;
  const char* group;
  const char* text;
};

// Expected values are written out by hand; none is computed by the library.
const std::vector<Fixture>& Fixtures() {
  static const std::vector<Fixture> fixtures = {
      {"trivial", "section3", R"(# The empty ideal set has the constant p_min boundary.
system ;2
ideal zero = empty
boundary zero => {[|1, |2] -> const(|1)}
member zero |1 |2 => no
)"},
      {"full", "section3", R"(# The ideal set P itself has the identity as boundary.
system ;2
ideal all = full
bf id = {[|1, |2] -> id}
boundary all => id
member all 12|1 2|1 => yes
)"},
      {"maximal-gap", "section3", R"(# P minus the single diagonal pair (a, a), where a has a gap below: the
# boundary drops to pred a at a and is the identity elsewhere.
system ;2
point a = 2|1
ideal s = strip(a=a, b=a)
member s a a => no
member s 12|1 a => yes
bf phi := boundary s
show phi => {[|1, 2|1) -> id; [2|1, 2|1] -> const(1|2); (2|1, |2] -> id}
eval phi a => 1|2
eval phi 21|2 => 21|2
eval phi 12|1 => 12|1
validate phi => ok
)"},
      {"maximal-nogap", "section3", R"(# The same construction at a point without a gap below: the boundary is
# the identity, shared with P itself.
system ;2
point a = |12
ideal s = strip(a=a, b=a)
member s a a => no
member full a a => yes
boundary s => {[|1, |2] -> id}
boundary full => {[|1, |2] -> id}
)"},
      {"strip-pair", "section2", R"(# sigma_ab and tau_ab = sigma_ab plus (a, b), with a lacking a gap below,
# share one boundary: identity, then constant a on (a, b], then identity.
system ;2
point a = |12
point b = 2|21
ideal sigma = strip(a=a, b=b)
ideal tau = strip_plus(a=a, b=b)
bf psi = {[|1, |12] -> id; (|12, 2|21] -> const(|12); (2|21, |2] -> id}
member sigma a b => no
member tau a b => yes
boundary sigma => psi
boundary tau => psi
validate psi => ok
)"},
      {"prime-variant", "section3", R"(# The strip pair with the diagonal removed.  Both sets share phi, which
# equals its own phi^-, and the closed set adds exactly (a, b) to the open
# one.
system ;2
point a = |12
point b = 2|21
ideal offdiag = open({[|1, |2] -> id})
ideal sigma1 = intersection(strip(a=a, b=b), offdiag)
ideal tau1 = intersection(strip_plus(a=a, b=b), offdiag)
bf phi = {[|1, |12) -> id-; [|12, 2|21] -> const(|12); (2|21, |2] -> id-}
boundary sigma1 => phi
boundary tau1 => phi
minus phi => phi
member closed(phi) a b => yes
member open(phi) a b => no
member closed(phi) a a => no
member open(phi) a a => no
member closed(phi) 12|1 2|1 => yes
member open(phi) 12|1 2|1 => yes
member closed(phi) 2|1 2|1 => no
member open(phi) 2|1 2|1 => no
member closed(phi) 11|12 22|12 => yes
member open(phi) 11|12 22|12 => yes
member closed(phi) 11|12 b => yes
member open(phi) 11|12 b => yes
member closed(phi) b b => no
member open(phi) b b => no
)"},
  };
  return fixtures;
}

}  // namespace

ScenarioResult RunScenario(std::string_view text, const ScenarioOptions& options,
                           std::ostream& out) {
  return Runner(options, out).Run(text);
}

ScenarioResult RunScenarioFile(const std::string& path, const ScenarioOptions& options,
                               std::ostream& out) {
  std::ifstream in(path);
  if (!in) {
    ScenarioResult r;
    r.exit_code = 2;
    r.error = "cannot read " + path;
    out << "error: " << r.error << "\n";
    return r;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return RunScenario(buffer.str(), options, out);
}

std::string ScenarioResultToJson(const ScenarioResult& result) {
  nlohmann::ordered_json j;
  j["exit_code"] = result.exit_code;
  if (!result.error.empty()) j["error"] = result.error;
  j["results"] = nlohmann::ordered_json::array();
  for (const CommandResult& r : result.results) {
    nlohmann::ordered_json e;
    e["line"] = r.line;
    e["command"] = r.command;
    e["output"] = r.output;
    if (r.expected) e["expected"] = *r.expected;
    e["ok"] = r.ok;
    j["results"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

const std::vector<std::string>& FixtureNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Fixture& f : Fixtures()) out.push_back(f.name);
    return out;
  }();
  return names;
}

std::string EmitFixture(const std::string& name) {
  for (const Fixture& f : Fixtures()) {
    if (name == f.name) return f.text;
  }
  throw Error(ErrorKind::kConstraint, "unknown fixture '" + name + "'");
}

ScenarioResult RunPaperExamples(const std::string& group, const ScenarioOptions& options,
                                std::ostream& out) {
  ScenarioResult total;
  ScenarioOptions fixed = options;
  fixed.system.reset();  // fixtures are written for their own system
  for (const Fixture& f : Fixtures()) {
    if (group != "all" && group != f.group) continue;
    out << "== " << f.name << "\n";
    ScenarioResult r = RunScenario(f.text, fixed, out);
    for (CommandResult& c : r.results) total.results.push_back(std::move(c));
    if (r.exit_code > total.exit_code) {
      total.exit_code = r.exit_code;
      if (!r.error.empty()) total.error = std::string(f.name) + ": " + r.error;
    }
  }
  return total;
}

}  // namespace boundfn
