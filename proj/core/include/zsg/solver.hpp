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

#ifndef ZSG_SOLVER_HPP_
#define ZSG_SOLVER_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zsg/diagnose.hpp"
#include "zsg/game.hpp"
#include "zsg/measure.hpp"

namespace zsg {

struct SolverConfig {
  double R0 = 4.0;
  double R_growth = 1.5;
  double h0 = 0.25;
  double h_shrink = 0.5;
  double tol = 1e-2;
  int max_rounds = 12;
  double boundary_mass_eps = 1e-3;
  std::size_t jobs = 1;  // threads for matrix tabulation

  // Throws DomainError on out-of-range settings.
  void Validate() const;
};

struct RoundRecord {
  int round = 0;
  double R = 0.0;
  double h = 0.0;
  double grid_value = 0.0;
  double cert_lower = 0.0;
  double cert_upper = 0.0;
  double gap = 0.0;
  double boundary_mass_a = 0.0;
  double boundary_mass_b = 0.0;
};

struct GameSolution {
  double value_estimate = 0.0;
  FiniteSupportMeasure strategy_a = FiniteSupportMeasure::Dirac(0.0);
  FiniteSupportMeasure strategy_b = FiniteSupportMeasure::Dirac(0.0);
  double certified_lower = 0.0;  // cflat(strategy_b); may be -inf
  double certified_upper = 0.0;  // csharp(strategy_a); may be +inf
  std::vector<RoundRecord> refinement_trace;
  bool converged = false;
  double final_h = 0.0;  // grid step of the reported round
  std::vector<std::string> notes;

  double certified_gap() const { return certified_upper - certified_lower; }
};

// (cflat(mu_b), csharp(mu_a)) against the continuous action sets.
std::pair<double, double> CertifiedBounds(const Game& game,
                                          const FiniteSupportMeasure& mu_a,
                                          const FiniteSupportMeasure& mu_b);

// Grid of step h on the set truncated to radius R: [lo, lo + R] for a
// half-line, [-R, R] through 0 for the full line, the whole set otherwise.
std::vector<double> TruncatedGrid(const ActionSet& set, double R, double h);

// Mass within h of truncation ends that are not ends of the set itself.
double BoundaryMass(const FiniteSupportMeasure& mu, const ActionSet& set,
                    double R, double h);

// Refuses (Error kRefused) unless `diagnosis` shows a value exists.
GameSolution SolveContinuous(const Game& game, const SolverConfig& cfg,
                             const DiagnoseReport& diagnosis);
GameSolution SolveContinuous(const Game& game, const SolverConfig& cfg = {});

struct SaddleReport {
  bool holds = false;
  double csharp = 0.0;
  double cflat = 0.0;
  double payoff = 0.0;
};

SaddleReport CheckSaddle(const Game& game, const FiniteSupportMeasure& mu_a,
                         const FiniteSupportMeasure& mu_b, double tol);

}  // namespace zsg

#endif  // ZSG_SOLVER_HPP_
