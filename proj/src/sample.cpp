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

#include "boundfn/sample.hpp"

namespace boundfn {

PointSampler::PointSampler(RefinementSystem sys, std::uint64_t seed,
                           std::vector<Point> anchors)
    : sys_(std::move(sys)), rng_(seed), anchors_(std::move(anchors)) {
  tails_ = {PMin(sys_), PMax(sys_), GenericTail(),
            Point::FromPartsUnchecked({}, {2, 1})};
  for (const Point& a : anchors_) tails_.push_back(a);
}

Word PointSampler::RandomWord(std::size_t level) {
  Word w;
  for (std::size_t n = 1; n <= level; ++n) {
    w.digits.push_back(static_cast<Digit>(1 + Below(sys_.radix(n))));
  }
  return w;
}

Point PointSampler::Random() {
  if (!anchors_.empty()) {
    switch (Below(6)) {
      case 0:
        return anchors_[Below(anchors_.size())];
      case 1: {
        const Point& a = anchors_[Below(anchors_.size())];
        auto n = Below(2) == 0 ? Successor(sys_, a) : Predecessor(sys_, a);
        return n ? *n : a;
      }
      default:
        break;
    }
  }
  return InOrbit(tails_[Below(tails_.size())]);
}

Point PointSampler::InOrbit(const Point& orbit_of) {
  return Splice(sys_, RandomWord(Below(7)), orbit_of);
}

Point PointSampler::Shifted(const Point& y, bool down) {
  const std::size_t span = y.preamble().size() + y.period().size() + 4;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const std::size_t pos = 1 + Below(span);
    const Digit d = y.digit(pos);
    const Digit k = sys_.radix(pos);
    if (down ? d == 1 : d == k) continue;
    Word w = Prefix(y, pos - 1);
    w.digits.push_back(down ? static_cast<Digit>(1 + Below(d - 1))
                            : static_cast<Digit>(d + 1 + Below(k - d)));
    const std::size_t extra = Below(4);
    for (std::size_t n = 0; n < extra; ++n) {
      w.digits.push_back(
          static_cast<Digit>(1 + Below(sys_.radix(w.digits.size() + 1))));
    }
    return Splice(sys_, w, y);
  }
  return y;
}

Point PointSampler::InOrbitBelow(const Point& y) { return Shifted(y, true); }
Point PointSampler::InOrbitAbove(const Point& y) { return Shifted(y, false); }

}  // namespace boundfn
