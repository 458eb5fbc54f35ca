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

// Boundary functions of ideal sets: extraction from expressions, the
// boundary-function axioms, phi^+ and points of modification, the sets
// sigma(phi), sigma[phi], B_phi, L_phi, and the equivalence phi ~ psi.

#ifndef BOUNDFN_BOUNDARY_HPP_
#define BOUNDFN_BOUNDARY_HPP_

#include <optional>
#include <vector>

#include "boundfn/ideal.hpp"
#include "boundfn/piecewise.hpp"

namespace boundfn {

// phi(y) = sup{x in orb y : (x, y) in sigma}, with sup of nothing = p_min.
PiecewiseBF BoundaryOf(const RefinementSystem& sys, const IdealExpr& sigma);

// Symbolic checks of the four boundary-function properties at piece
// endpoints, followed by random point sampling.  Property 1 and the p_min
// case of property 4 are skipped for module sets, and 2a asks for G instead
// of P.
std::vector<Violation> ValidateBF(const RefinementSystem& sys,
                                  const PiecewiseBF& phi,
                                  const SampleOptions& options = {});

// PiecewiseBF::Make followed by ValidateBF; throws kConstraint on the first
// violation.
PiecewiseBF MakeValidated(const RefinementSystem& sys, std::vector<Piece> pieces,
                          SetMode mode = SetMode::kIdeal);

struct ModificationCertificate {
  Point y;
  Word u;
  Word v;
};

struct ModificationResult {
  Verdict verdict;
  std::optional<ModificationCertificate> certificate;
};

ModificationResult IsPointOfModification(
    const RefinementSystem& sys, const PiecewiseBF& phi, const Point& y,
    std::size_t depth_cap = kDefaultDepthCap);

// suc phi(y) at the points of modification, phi(y) elsewhere.
PiecewiseBF BFPlus(const RefinementSystem& sys, const PiecewiseBF& phi,
                   std::size_t depth_cap = kDefaultDepthCap);

IdealExpr SigmaOpen(const PiecewiseBF& phi);
IdealExpr SigmaClosed(const PiecewiseBF& phi);

// (phi(y), y) in sigma[phi].
Verdict InBPhi(const RefinementSystem& sys, const PiecewiseBF& phi,
               const Point& y, std::size_t depth_cap = kDefaultDepthCap);
// (phi(y), y) in B_phi and phi(y) has a gap below.
Verdict InLPhi(const RefinementSystem& sys, const PiecewiseBF& phi,
               const Point& y, std::size_t depth_cap = kDefaultDepthCap);

// Yes iff phi is the boundary function of sigma.  The piecewise comparison
// decides; the inclusions sigma(phi) u L_phi <= sigma <= sigma[phi] are
// sampled as a cross-check and any disagreement throws kInternal.
Verdict SandwichCheck(const RefinementSystem& sys, const IdealExpr& sigma,
                      const PiecewiseBF& phi, const SampleOptions& options = {});

// phi^- == psi^-.
bool BFEquiv(const RefinementSystem& sys, const PiecewiseBF& phi,
             const PiecewiseBF& psi);
// phi^- <= psi <= phi^+ pointwise.
bool BFBetween(const RefinementSystem& sys, const PiecewiseBF& phi,
               const PiecewiseBF& psi,
               std::size_t depth_cap = kDefaultDepthCap);

// pred p when p has a gap below, p otherwise.
Point Lowered(const RefinementSystem& sys, const Point& p);
// suc p when p has a gap above, p otherwise.
Point Raised(const RefinementSystem& sys, const Point& p);

}  // namespace boundfn

#endif  // BOUNDFN_BOUNDARY_HPP_
