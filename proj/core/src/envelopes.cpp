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

#include "zsg/envelopes.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zsg/error.hpp"
#include "zsg/roots.hpp"

namespace zsg {
namespace {

// Relative slack under which two candidate values count as a tie.
constexpr double kTieTolerance = 1e-12;

Extremum MinimumOnRegion(const Polynomial& phi, const Region& region) {
  if (!(region.lower <= region.upper)) {
    throw DomainError("extremum over an empty region");
  }
  if (phi.is_constant()) {
    const double arg = std::min(std::max(0.0, region.lower), region.upper);
    return {ExtendedValue::Finite(phi.coefficient(0)), true, arg};
  }
  if (std::isinf(region.lower) && phi.tail(-1).is_minus_infinity()) {
    return {ExtendedValue::MinusInfinity(), false, std::nullopt};
  }
  if (std::isinf(region.upper) && phi.tail(+1).is_minus_infinity()) {
    return {ExtendedValue::MinusInfinity(), false, std::nullopt};
  }

  std::vector<double> candidates;
  if (std::isfinite(region.lower)) candidates.push_back(region.lower);
  for (double r : RealRoots(phi.derivative(), region.lower, region.upper)) {
    candidates.push_back(r);
  }
  if (std::isfinite(region.upper)) candidates.push_back(region.upper);
  std::sort(candidates.begin(), candidates.end());

  double best_value = std::numeric_limits<double>::infinity();
  for (double x : candidates) best_value = std::min(best_value, phi(x));
  const double slack = kTieTolerance * std::max(1.0, std::abs(best_value));
  for (double x : candidates) {
    if (phi(x) <= best_value + slack) {
      return {ExtendedValue::Finite(phi(x)), true, x};
    }
  }
  // Unreachable: a nonconstant polynomial bounded below on the region has a
  // finite endpoint or an interior critical point.
  throw std::logic_error("extremum candidate set is empty");
}

}  // namespace

std::pair<ExtendedValue, ExtendedValue> TailLimits(const Polynomial& phi) {
  return {phi.tail(-1), phi.tail(+1)};
}

Extremum ExtremumOnRegion(const Polynomial& phi, const Region& region,
                          Direction direction) {
  if (direction == Direction::kMin) return MinimumOnRegion(phi, region);
  Extremum e = MinimumOnRegion(-phi, region);
  e.value = -e.value;
  return e;
}

Extremum CSharp(const Game& game, const FiniteSupportMeasure& mu_a) {
  mu_a.require_on(game.action_a(), "player I");
  if (const auto* m = std::get_if<MatrixForm>(&game.payoff())) {
    const Matrix& c = m->entries;
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_col = 0;
    for (std::size_t j = 0; j < c.cols(); ++j) {
      double v = 0.0;
      for (const Atom& atom : mu_a.atoms()) {
        v += atom.weight * c(static_cast<std::size_t>(atom.point), j);
      }
      if (v > best) {
        best = v;
        best_col = j;
      }
    }
    return {ExtendedValue::Finite(best), true, static_cast<double>(best_col)};
  }
  Polynomial mixed;
  for (const Atom& atom : mu_a.atoms()) {
    mixed += atom.weight * SliceInB(game, atom.point);
  }
  return ExtremumOnRegion(mixed, Region::Of(game.action_b()), Direction::kMax);
}

Extremum CFlat(const Game& game, const FiniteSupportMeasure& mu_b) {
  Extremum e = CSharp(SwapPlayers(game), mu_b);
  e.value = -e.value;
  return e;
}

}  // namespace zsg
