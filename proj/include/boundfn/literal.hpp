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

#ifndef BOUNDFN_LITERAL_HPP_
#define BOUNDFN_LITERAL_HPP_

#include <map>
#include <string>
#include <string_view>

#include "boundfn/ideal.hpp"
#include "boundfn/order.hpp"
#include "boundfn/piecewise.hpp"

namespace boundfn {

// Text syntax shared by scenario files and the command line.
//
//   system  := digits? ";" digits          e.g. ";2", "2.3;2.3"
//   point   := digits? "|" digits | name   e.g. "12|2", "1.2|2", "|1", "pmin"
//   word    := digits | "e"
//   ideal   := "empty" | "full" [ "(" "mode=module" ")" ]
//            | "finite(level=N, pairs=[(w, w), ...])"
//            | "strip(a=P, b=P)" | "strip_plus(a=P, b=P)" | "corner(a=P, t=P)"
//            | "open(" bf ")" | "closed(" bf ")"
//            | "union(" ideal, ... ")" | "intersection(" ideal, ... ")"
//            | name
//   bf      := ["module:"] "{" piece { ";" piece } "}" | name
//   piece   := ("[" | "(") P "," P ("]" | ")") "->" ("id" | "id-" | "const(" P ")")
//
// Digits are written one character each unless the literal contains a dot,
// in which case they are decimal numbers separated by dots.  The named
// constructors other than finite/open/closed/union/intersection accept a
// trailing "mode=module" argument.  Parse failures throw kParse with the
// column (1-based) of the offending character.

struct Bindings {
  std::map<std::string, Point> points;
  std::map<std::string, IdealExpr> ideals;
  std::map<std::string, PiecewiseBF> bfs;
};

RefinementSystem ParseSystem(std::string_view text);
std::string FormatSystem(const RefinementSystem& sys);

Point ParsePoint(const RefinementSystem& sys, std::string_view text,
                 const Bindings* bindings = nullptr);
Word ParseWord(const RefinementSystem& sys, std::string_view text);
IdealExpr ParseIdealExpr(const RefinementSystem& sys, std::string_view text,
                         const Bindings* bindings = nullptr);
PiecewiseBF ParseBF(const RefinementSystem& sys, std::string_view text,
                    const Bindings* bindings = nullptr);

std::string FormatIdealExpr(const IdealExpr& sigma);

}  // namespace boundfn

#endif  // BOUNDFN_LITERAL_HPP_
