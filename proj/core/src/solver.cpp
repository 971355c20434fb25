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

#include "zsg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zsg/envelopes.hpp"
#include "zsg/error.hpp"
#include "zsg/expected_payoff.hpp"
#include "zsg/matrix_game.hpp"

namespace zsg {
namespace {

constexpr double kMinWeight = 1e-9;

double ToDouble(const ExtendedValue& v) { return v.to_double(); }

FiniteSupportMeasure Lift(const std::vector<double>& grid,
                          const std::vector<double>& weights) {
  std::vector<Atom> atoms;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (weights[k] > 0) atoms.push_back({grid[k], weights[k]});
  }
  return FiniteSupportMeasure::Normalized(std::move(atoms), kMinWeight);
}

}  // namespace

void SolverConfig::Validate() const {
  if (!(R0 > 0) || !(R_growth >= 1) || !(h0 > 0) || !(h_shrink > 0) ||
      !(h_shrink <= 1) || !(tol > 0) || max_rounds < 1 ||
      !(boundary_mass_eps >= 0) || jobs < 1) {
    throw DomainError("solver configuration out of range");
  }
}

std::pair<double, double> CertifiedBounds(const Game& game,
                                          const FiniteSupportMeasure& mu_a,
                                          const FiniteSupportMeasure& mu_b) {
  return {ToDouble(CFlat(game, mu_b).value), ToDouble(CSharp(game, mu_a).value)};
}

std::vector<double> TruncatedGrid(const ActionSet& set, double R, double h) {
  std::vector<double> g;
  switch (set.kind()) {
    case ActionSet::Kind::kFinite:
      for (std::size_t k = 0; k < set.count(); ++k) g.push_back(double(k));
      break;
    case ActionSet::Kind::kHalfLine: {
      const auto n = static_cast<long>(std::floor(R / h + 1e-9));
      for (long k = 0; k <= n; ++k) g.push_back(set.lower() + k * h);
      break;
    }
    case ActionSet::Kind::kFullLine: {
      const auto n = static_cast<long>(std::floor(R / h + 1e-9));
      for (long k = -n; k <= n; ++k) g.push_back(k * h);
      break;
    }
    case ActionSet::Kind::kInterval: {
      const auto n =
          static_cast<long>(std::floor((set.upper() - set.lower()) / h + 1e-9));
      for (long k = 0; k <= n; ++k) g.push_back(set.lower() + k * h);
      if (set.upper() - g.back() > 1e-12 * std::max(1.0, std::abs(set.upper()))) {
        g.push_back(set.upper());
      } else {
        g.back() = set.upper();
      }
      break;
    }
  }
  return g;
}

double BoundaryMass(const FiniteSupportMeasure& mu, const ActionSet& set,
                    double R, double h) {
  const double slack = h * (1 + 1e-9);
  switch (set.kind()) {
    case ActionSet::Kind::kHalfLine: {
      const double end = set.lower() + R;
      return mu.mass_in(end - slack, end);
    }
    case ActionSet::Kind::kFullLine:
      return mu.mass_in(-R, -R + slack) + mu.mass_in(R - slack, R);
    default:
      return 0.0;
  }
}

GameSolution SolveContinuous(const Game& game, const SolverConfig& cfg) {
  return SolveContinuous(game, cfg, Diagnose(game));
}

GameSolution SolveContinuous(const Game& game, const SolverConfig& cfg,
                             const DiagnoseReport& diagnosis) {
  cfg.Validate();
  if (!game.validity().valid()) {
    throw Error(ErrorCategory::kInvalidGame, "game is not valid");
  }
  const TheoremFlags& t = diagnosis.theorems;
  if (!t.value_exists && !t.solution_exists) {
    throw Error(ErrorCategory::kRefused,
                "no existence result applies (need coercivity in a and a "
                "proved Ma witness)");
  }

  GameSolution best;
  bool have_best = false;
  double R = cfg.R0;
  double h = cfg.h0;
  for (int round = 1; round <= cfg.max_rounds; ++round) {
    const std::vector<double> ga = TruncatedGrid(game.action_a(), R, h);
    const std::vector<double> gb = TruncatedGrid(game.action_b(), R, h);
    const Matrix c = TabulateMatrix(game, ga, gb, cfg.jobs);
    const double scale = std::max(1.0, c.max_entry() - c.min_entry());
    const MatrixGameResult lp = SolveMatrixGame(c, 1e-9 * scale, true);

    const FiniteSupportMeasure mu_a = Lift(ga, lp.row_strategy);
    const FiniteSupportMeasure mu_b = Lift(gb, lp.col_strategy);
    const auto [lower, upper] = CertifiedBounds(game, mu_a, mu_b);

    RoundRecord rec;
    rec.round = round;
    rec.R = R;
    rec.h = h;
    rec.grid_value = lp.value;
    rec.cert_lower = lower;
    rec.cert_upper = upper;
    rec.gap = upper - lower;
    rec.boundary_mass_a = BoundaryMass(mu_a, game.action_a(), R, h);
    rec.boundary_mass_b = BoundaryMass(mu_b, game.action_b(), R, h);
    best.refinement_trace.push_back(rec);

    const bool done = rec.gap <= cfg.tol &&
                      rec.boundary_mass_a <= cfg.boundary_mass_eps &&
                      rec.boundary_mass_b <= cfg.boundary_mass_eps;
    if (done || !have_best || rec.gap < best.certified_gap()) {
      have_best = true;
      best.strategy_a = mu_a;
      best.strategy_b = mu_b;
      best.certified_lower = lower;
      best.certified_upper = upper;
      best.final_h = h;
      best.value_estimate = std::clamp(lp.value, std::min(lower, upper),
                                       std::max(lower, upper));
    }
    if (done) {
      best.converged = true;
      break;
    }
    if (game.is_matrix()) break;  // the grid is already the whole game
    R *= cfg.R_growth;
    h *= cfg.h_shrink;
  }
  if (!best.converged) {
    best.notes.push_back("refinement stopped before the certified gap closed");
  }
  if (!t.solution_exists) {
    best.notes.push_back(
        "only the value theorem applies; gap closure is not guaranteed");
  }
  return best;
}

SaddleReport CheckSaddle(const Game& game, const FiniteSupportMeasure& mu_a,
                         const FiniteSupportMeasure& mu_b, double tol) {
  SaddleReport r;
  r.csharp = ToDouble(CSharp(game, mu_a).value);
  r.cflat = ToDouble(CFlat(game, mu_b).value);
  r.payoff = ToDouble(ExpectedPayoff(game, mu_a, mu_b));
  r.holds = r.csharp - r.cflat <= tol && std::abs(r.payoff - r.csharp) <= tol;
  return r;
}

}  // namespace zsg
