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

#include <algorithm>
#include <cmath>
#include <limits>

#include "flat_model.hpp"
#include "zsg/assumptions.hpp"
#include "zsg/roots.hpp"

namespace zsg {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTie = 1e-12;
constexpr double kSaddleTolerance = 1e-9;

std::optional<PureObstruction> BestPair(const Polynomial& phi,
                                        const std::vector<double>& negatives,
                                        const std::vector<double>& positives) {
  if (negatives.empty() || positives.empty()) return std::nullopt;
  double s_star = negatives.front();
  for (double s : negatives) {
    if (phi(s) > phi(s_star)) s_star = s;
  }
  double s_upper = positives.front();
  for (double s : positives) {
    if (phi(s) < phi(s_upper)) s_upper = s;
  }
  const double gap = phi(s_star) - phi(s_upper);
  if (!(gap > 0)) return std::nullopt;
  return PureObstruction{s_star, s_upper, gap};
}

Extremum MatrixLowerValue(const Matrix& c) {
  double best = -kInf;
  std::size_t best_col = 0;
  for (std::size_t j = 0; j < c.cols(); ++j) {
    double col_min = kInf;
    for (std::size_t i = 0; i < c.rows(); ++i) col_min = std::min(col_min, c(i, j));
    if (col_min > best) {
      best = col_min;
      best_col = j;
    }
  }
  return {ExtendedValue::Finite(best), true, static_cast<double>(best_col)};
}

}  // namespace

std::optional<PureObstruction> FindPureObstruction(const Polynomial& phi) {
  if (phi.is_constant()) return std::nullopt;
  std::vector<double> neg;
  std::vector<double> pos;
  for (double r : RealRoots(phi.derivative(), -kInf, kInf)) {
    if (r < 0) neg.push_back(r);
    if (r > 0) pos.push_back(r);
  }
  if (auto found = BestPair(phi, neg, pos)) return found;
  const double limit = 4.0 * std::max(1.0, phi.cauchy_radius());
  for (double s = 1e-3; s <= limit; s *= std::pow(2.0, 0.25)) {
    neg.push_back(-s);
    pos.push_back(s);
  }
  return BestPair(phi, neg, pos);
}

Extremum LowerPureValue(const Game& game) {
  if (const auto* m = std::get_if<MatrixForm>(&game.payoff())) {
    return MatrixLowerValue(m->entries);
  }
  const ActionSet& set_b = game.action_b();
  const double lo = set_b.lower();
  const double hi = set_b.upper();
  const detail::FlatPieces flat = detail::AllFlatPieces(game);

  std::vector<double> candidates;
  auto add = [&](double b) {
    if (b >= lo && b <= hi) candidates.push_back(b);
  };
  if (std::isfinite(lo)) add(lo);
  if (std::isfinite(hi)) add(hi);
  for (double b : flat.switch_points) add(b);
  for (std::size_t i = 0; i < flat.pieces.size(); ++i) {
    const Polynomial& p = flat.pieces[i];
    if (!p.is_constant()) {
      for (double b : RealRoots(p.derivative(), lo, hi)) add(b);
    }
    for (std::size_t j = i + 1; j < flat.pieces.size(); ++j) {
      const Polynomial diff = p - flat.pieces[j];
      if (!diff.is_constant()) {
        for (double b : RealRoots(diff, lo, hi)) add(b);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());

  double best = -kInf;
  for (double b : candidates) {
    const ExtendedValue v = CFlatAt(game, b).value;
    if (v.is_finite()) best = std::max(best, v.value());
  }
  Extremum out{ExtendedValue::MinusInfinity(), false, std::nullopt};
  if (best > -kInf) {
    const double slack = kTie * std::max(1.0, std::abs(best));
    for (double b : candidates) {
      const ExtendedValue v = CFlatAt(game, b).value;
      if (v.is_finite() && v.value() >= best - slack) {
        out = {v, true, b};
        break;
      }
    }
  }

  // Suprema approached only at an infinite end of B.
  for (int direction : {-1, +1}) {
    if (direction < 0 ? set_b.bounded_below() : set_b.bounded_above()) continue;
    const detail::FlatAsymptote model = detail::FlatTailModel(game, direction);
    if (model.minus_infinity || model.pieces.empty()) continue;
    const ExtendedValue limit =
        detail::EventualMin(model.pieces, direction).tail(direction);
    if (limit.is_minus_infinity()) continue;
    const bool beats =
        limit.is_plus_infinity() || !out.value.is_finite() ||
        limit.value() >
            out.value.value() + kTie * std::max(1.0, std::abs(limit.value()));
    if (beats) out = {limit, false, std::nullopt};
  }
  return out;
}

PureValueGap ComputePureValueGap(const Game& game) {
  PureValueGap out;
  out.lower = LowerPureValue(game);
  const Extremum swapped = LowerPureValue(SwapPlayers(game));
  out.upper = {-swapped.value, swapped.attained, swapped.argpoint};
  if (out.lower.attained && out.upper.attained && out.lower.value.is_finite() &&
      out.upper.value.is_finite() &&
      std::abs(out.lower.value.value() - out.upper.value.value()) <=
          kSaddleTolerance) {
    out.saddle = std::make_pair(*out.upper.argpoint, *out.lower.argpoint);
  }
  return out;
}

}  // namespace zsg
