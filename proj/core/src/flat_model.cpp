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

#include "flat_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zsg/envelopes.hpp"
#include "zsg/error.hpp"
#include "zsg/roots.hpp"

namespace zsg::detail {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> CriticalPoints(const Polynomial& phi) {
  if (phi.is_constant()) return {};
  return RealRoots(phi.derivative(), -kInf, kInf);
}

// Adds the limit of phi at one infinite end of the minimization window.
// Returns false when that limit is -inf.
bool AddTail(const Polynomial& phi, int side, std::vector<Polynomial>& out) {
  const ExtendedValue t = phi.tail(side);
  if (t.is_minus_infinity()) return false;
  if (t.is_finite()) out.push_back(Polynomial::Constant(t.value()));
  return true;
}

FlatAsymptote DifferenceTail(const Polynomial& phi, const ActionSet& a,
                             int direction) {
  FlatAsymptote out;
  const double lo = a.lower();
  const double hi = a.upper();
  // All critical points of phi lie in (-rho, rho).
  const double rho = phi.is_constant() ? 0.0 : phi.derivative().cauchy_radius();
  auto edge = [&](double end) { return phi.compose_affine(-1.0, end); };
  auto crit_values = [&] {
    for (double r : CriticalPoints(phi)) {
      out.pieces.push_back(Polynomial::Constant(phi(r)));
    }
  };

  // The window is [lo - b, hi - b]; it runs to -inf when direction > 0.
  const double near_end = direction > 0 ? hi : lo;  // trailing edge
  const double far_end = direction > 0 ? lo : hi;
  if (std::isfinite(near_end)) {
    // Past this point the window lies where phi is monotone.
    out.radius = direction > 0 ? hi + rho : rho - lo;
    out.pieces.push_back(edge(near_end));
    if (std::isfinite(far_end)) {
      out.pieces.push_back(edge(far_end));
    } else if (!AddTail(phi, -direction, out.pieces)) {
      out.minus_infinity = true;
    }
  } else {
    // The window is unbounded on the trailing side and eventually covers
    // every critical point.
    out.radius = std::isfinite(far_end)
                     ? (direction > 0 ? far_end + rho : rho - far_end)
                     : 0.0;
    crit_values();
    if (std::isfinite(far_end)) {
      out.pieces.push_back(edge(far_end));
    } else if (!AddTail(phi, -direction, out.pieces)) {
      out.minus_infinity = true;
    }
    if (!AddTail(phi, direction, out.pieces)) out.minus_infinity = true;
  }
  if (phi.is_constant()) out.pieces = {phi};
  out.radius = std::max(out.radius, 0.0);
  return out;
}

// cflat for the forms whose inner infimum does not depend on b's region.
std::optional<Polynomial> GlobalFlat(const Game& game) {
  if (std::holds_alternative<QuadraticDifference>(game.payoff())) {
    const double m = game.action_a().clamp(0.0);
    return Polynomial{m * m, 0.0, -1.0};
  }
  if (const auto* s = std::get_if<SeparableForm>(&game.payoff())) {
    const Extremum inf_a =
        ExtremumOnRegion(s->phi_a, Region::Of(game.action_a()), Direction::kMin);
    if (!inf_a.value.is_finite()) return std::nullopt;
    return s->phi_b + Polynomial::Constant(s->shift + inf_a.value.value());
  }
  throw std::logic_error("GlobalFlat on a difference or matrix form");
}

}  // namespace

int EventualSign(const Polynomial& p, int direction) {
  if (p.is_constant()) {
    const double c = p.coefficient(0);
    return (c > 0) - (c < 0);
  }
  const int lead = p.leading() > 0 ? 1 : -1;
  return (direction < 0 && p.degree() % 2 == 1) ? -lead : lead;
}

const Polynomial& EventualMin(const std::vector<Polynomial>& pieces,
                              int direction) {
  if (pieces.empty()) throw std::logic_error("EventualMin of no pieces");
  const Polynomial* best = &pieces.front();
  for (const Polynomial& p : pieces) {
    if (EventualSign(p - *best, direction) < 0) best = &p;
  }
  return *best;
}

FlatPieces AllFlatPieces(const Game& game) {
  if (game.is_matrix()) {
    throw UnsupportedError("flat pieces are defined for polynomial forms");
  }
  FlatPieces out;
  if (const auto* d = std::get_if<DifferenceForm>(&game.payoff())) {
    const Polynomial& phi = d->phi;
    const double lo = game.action_a().lower();
    const double hi = game.action_a().upper();
    if (phi.is_constant()) {
      out.pieces.push_back(phi);
      return out;
    }
    for (double end : {lo, hi}) {
      if (std::isfinite(end)) out.pieces.push_back(phi.compose_affine(-1.0, end));
    }
    for (double r : CriticalPoints(phi)) {
      out.pieces.push_back(Polynomial::Constant(phi(r)));
      for (double end : {lo, hi}) {
        if (std::isfinite(end)) out.switch_points.push_back(end - r);
      }
    }
    return out;
  }
  if (auto p = GlobalFlat(game)) out.pieces.push_back(*p);
  return out;
}

FlatAsymptote FlatTailModel(const Game& game, int direction) {
  if (game.is_matrix()) {
    throw UnsupportedError("flat tail model is defined for polynomial forms");
  }
  if (const auto* d = std::get_if<DifferenceForm>(&game.payoff())) {
    return DifferenceTail(d->phi, game.action_a(), direction);
  }
  FlatAsymptote out;
  if (auto p = GlobalFlat(game)) {
    out.pieces.push_back(*p);
  } else {
    out.minus_infinity = true;
  }
  return out;
}

double SeparationRadius(const std::vector<Polynomial>& pieces,
                        const Polynomial& base) {
  double r = 0.0;
  for (const Polynomial& p : pieces) {
    const Polynomial diff = p - base;
    if (!diff.is_constant()) r = std::max(r, diff.cauchy_radius());
  }
  return r;
}

}  // namespace zsg::detail
