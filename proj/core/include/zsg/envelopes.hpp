// Copyright 2026 The zsgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZSG_ENVELOPES_HPP_
#define ZSG_ENVELOPES_HPP_

#include <limits>
#include <optional>
#include <utility>

#include "zsg/action_set.hpp"
#include "zsg/extended_value.hpp"
#include "zsg/game.hpp"
#include "zsg/measure.hpp"
#include "zsg/polynomial.hpp"

namespace zsg {

// Closed region of the real line; infinite ends mean unbounded.
struct Region {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();

  static Region Of(const ActionSet& set) { return {set.lower(), set.upper()}; }
};

enum class Direction { kMin, kMax };

struct Extremum {
  ExtendedValue value;
  bool attained = false;
  std::optional<double> argpoint;  // set iff attained
};

// (limit at -inf, limit at +inf).
std::pair<ExtendedValue, ExtendedValue> TailLimits(const Polynomial& phi);

// Exact extremum of a polynomial over a closed region: finite endpoints and
// the roots of phi' inside the region are the candidates, infinite ends are
// settled by the tail limits. Equal candidate values resolve to the smallest
// argpoint.
Extremum ExtremumOnRegion(const Polynomial& phi, const Region& region,
                          Direction direction);

// sup over b in B of c(mu_a, b): the worst case Player I faces.
Extremum CSharp(const Game& game, const FiniteSupportMeasure& mu_a);
// inf over a in A of c(a, mu_b). Computed as -CSharp of the swapped game.
Extremum CFlat(const Game& game, const FiniteSupportMeasure& mu_b);

inline Extremum CSharpAt(const Game& game, double a) {
  return CSharp(game, FiniteSupportMeasure::Dirac(a));
}
inline Extremum CFlatAt(const Game& game, double b) {
  return CFlat(game, FiniteSupportMeasure::Dirac(b));
}

enum class Part { kPositive, kNegative };

// Integral of q^+ (kPositive, result >= 0 or +inf) or of q^- = min(q, 0)
// (kNegative, result <= 0 or -inf) against a rational-tail measure. The
// tail degree of q decides divergence first: the density decays like t^-2,
// so a signed part that grows with degree >= 1 at an end of the support
// diverges. Convergent cases are integrated by adaptive Gauss-Kronrod
// quadrature after the substitution t = tan(theta).
ExtendedValue ClassifyPolynomialIntegral(const Polynomial& q,
                                         const HeavyTailMeasure& measure,
                                         Part part);

// Same for b -> phi(shift - b), the difference-form slice at a = shift.
ExtendedValue ClassifyTailIntegral(const Polynomial& phi, double shift,
                                   const HeavyTailMeasure& measure, Part part);

}  // namespace zsg

#endif  // ZSG_ENVELOPES_HPP_
