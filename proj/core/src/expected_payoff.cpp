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

#include "zsg/expected_payoff.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "zsg/envelopes.hpp"
#include "zsg/error.hpp"

namespace zsg {
namespace {

using boost::math::quadrature::gauss_kronrod;

void RequireOn(const Strategy& mu, const ActionSet& set, const char* who) {
  std::visit([&](const auto& m) { m.require_on(set, who); }, mu);
}

// Any point of the support works as the "generic" fixed action: for every
// supported form the leading coefficient of a slice does not depend on the
// fixed action.
double RepresentativePoint(const HeavyTailMeasure& m) {
  return m.support().bounded_below() ? m.support().lower() : 0.0;
}

PayoffParts FiniteByFinite(const Game& game, const FiniteSupportMeasure& mu_a,
                           const FiniteSupportMeasure& mu_b) {
  double pos = 0.0;
  double neg = 0.0;
  for (const Atom& a : mu_a.atoms()) {
    for (const Atom& b : mu_b.atoms()) {
      const double v = a.weight * b.weight * game.payoff_unchecked(a.point, b.point);
      if (v > 0) {
        pos += v;
      } else {
        neg += v;
      }
    }
  }
  return {ExtendedValue::Finite(pos), ExtendedValue::Finite(neg),
          ExtendedValue::Finite(pos + neg)};
}

// Atoms of mu_fixed paired with a rational-tail opponent. `slice(x)` is the
// payoff as a polynomial in the opponent's action with the fixed side at x.
template <typename SliceFn>
PayoffParts FiniteByTail(const FiniteSupportMeasure& mu_fixed,
                         const HeavyTailMeasure& tail, SliceFn slice) {
  ExtendedValue pos = ExtendedValue::Finite(0.0);
  ExtendedValue neg = ExtendedValue::Finite(0.0);
  for (const Atom& atom : mu_fixed.atoms()) {
    const Polynomial q = slice(atom.point);
    pos = pos + ClassifyPolynomialIntegral(q, tail, Part::kPositive).scaled(atom.weight);
    neg = neg + ClassifyPolynomialIntegral(q, tail, Part::kNegative).scaled(atom.weight);
  }
  return {pos, neg, pos + neg};
}

// Both sides heavy-tailed. A signed part diverges iff it diverges along one
// variable with the other held fixed (Tonelli); otherwise that part of the
// payoff is bounded on the support for every supported form and a nested
// quadrature over both angles evaluates it.
PayoffParts TailByTail(const Game& game, const HeavyTailMeasure& mu_a,
                       const HeavyTailMeasure& mu_b) {
  const Polynomial in_b = SliceInB(game, RepresentativePoint(mu_a));
  const Polynomial in_a = SliceInA(game, RepresentativePoint(mu_b));

  auto part_value = [&](Part part) -> ExtendedValue {
    const ExtendedValue inf = part == Part::kPositive
                                  ? ExtendedValue::PlusInfinity()
                                  : ExtendedValue::MinusInfinity();
    if (ClassifyPolynomialIntegral(in_b, mu_b, part) == inf ||
        ClassifyPolynomialIntegral(in_a, mu_a, part) == inf) {
      return inf;
    }
    const double sign = part == Part::kPositive ? 1.0 : -1.0;
    auto inner = [&](double theta_a) {
      const double a = std::tan(theta_a);
      auto f = [&](double theta_b) {
        const double v = sign * game.payoff_unchecked(a, std::tan(theta_b));
        return std::isfinite(v) ? std::max(v, 0.0) : 0.0;
      };
      return gauss_kronrod<double, 31>::integrate(f, mu_b.theta_lower(),
                                                  mu_b.theta_upper(), 12, 1e-10);
    };
    const double outer = gauss_kronrod<double, 31>::integrate(
        inner, mu_a.theta_lower(), mu_a.theta_upper(), 12, 1e-10);
    return ExtendedValue::Finite(sign * mu_a.normalizer() * mu_b.normalizer() *
                                 outer);
  };
  const ExtendedValue pos = part_value(Part::kPositive);
  const ExtendedValue neg = part_value(Part::kNegative);
  return {pos, neg, pos + neg};
}

}  // namespace

PayoffParts ExpectedPayoffParts(const Game& game, const Strategy& mu_a,
                                const Strategy& mu_b) {
  const auto* fa = std::get_if<FiniteSupportMeasure>(&mu_a);
  const auto* fb = std::get_if<FiniteSupportMeasure>(&mu_b);
  if (game.is_matrix() && !(fa && fb)) {
    throw UnsupportedError("rational-tail measures do not apply to matrix games");
  }
  RequireOn(mu_a, game.action_a(), "player I");
  RequireOn(mu_b, game.action_b(), "player II");
  if (fa && fb) return FiniteByFinite(game, *fa, *fb);
  const auto* ta = std::get_if<HeavyTailMeasure>(&mu_a);
  const auto* tb = std::get_if<HeavyTailMeasure>(&mu_b);
  if (fa && tb) {
    return FiniteByTail(*fa, *tb, [&](double a) { return SliceInB(game, a); });
  }
  if (ta && fb) {
    return FiniteByTail(*fb, *ta, [&](double b) { return SliceInA(game, b); });
  }
  return TailByTail(game, *ta, *tb);
}

}  // namespace zsg
