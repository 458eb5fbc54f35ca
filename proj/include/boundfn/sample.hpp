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

// Random eventually periodic points biased towards a set of anchor points.

#ifndef BOUNDFN_SAMPLE_HPP_
#define BOUNDFN_SAMPLE_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "boundfn/order.hpp"

namespace boundfn {

class PointSampler {
 public:
  PointSampler(RefinementSystem sys, std::uint64_t seed,
               std::vector<Point> anchors = {});

  std::uint64_t Below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }

  Word RandomWord(std::size_t level);

  // An anchor, a neighbour of an anchor, or a random word followed by one of
  // a small pool of tails.
  Point Random();

  // A random point sharing its tail with `orbit_of`.
  Point InOrbit(const Point& orbit_of);

  // A point of the orbit of y that is <= y (resp. >= y), usually strictly.
  Point InOrbitBelow(const Point& y);
  Point InOrbitAbove(const Point& y);

  const RefinementSystem& system() const { return sys_; }

 private:
  Point Shifted(const Point& y, bool down);

  RefinementSystem sys_;
  std::mt19937_64 rng_;
  std::vector<Point> anchors_;
  std::vector<Point> tails_;
};

}  // namespace boundfn

#endif  // BOUNDFN_SAMPLE_HPP_
