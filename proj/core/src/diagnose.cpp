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

#include "zsg/diagnose.hpp"

#include <cmath>

namespace zsg {
namespace {

constexpr double kGapTolerance = 1e-9;

}  // namespace

const char* PureSolutionName(PureSolution p) {
  switch (p) {
    case PureSolution::kExists:
      return "exists";
    case PureSolution::kNone:
      return "none";
    case PureSolution::kUnknown:
      return "unknown";
  }
  return "unknown";
}

bool InfCompactInA(const Game& game) {
  if (game.is_matrix()) return true;
  const ActionSet& a = game.action_a();
  const ActionSet& b = game.action_b();
  // The leading term of a -> c(a, b) does not depend on b for any
  // polynomial form, so one slice decides.
  const Polynomial slice = SliceInA(game, b.clamp(0.0));
  if (!a.bounded_above() && !slice.tail(+1).is_plus_infinity()) return false;
  if (!a.bounded_below() && !slice.tail(-1).is_plus_infinity()) return false;
  return true;
}

DiagnoseReport Diagnose(const Game& game) {
  DiagnoseReport out;
  out.form = FormName(game.payoff());
  out.validity = game.validity();
  const auto* diff = std::get_if<DifferenceForm>(&game.payoff());
  if (diff) {
    out.tails = TailLimits(diff->phi);
    out.decomposition = DecomposeMonotonePlusBounded(diff->phi);
    out.obstruction = FindPureObstruction(diff->phi);
  }

  TheoremFlags& t = out.theorems;
  t.inf_compact_a = InfCompactInA(game);
  t.sup_compact_b = InfCompactInA(SwapPlayers(game));

  if (!out.validity.valid()) {
    out.ma.detail = out.mb.detail = "game is not valid";
    out.notes.push_back("game is not valid; no existence result applies");
    return out;
  }

  out.ma = CheckMa(game);
  out.mb = CheckMb(game);
  out.pure_gap = ComputePureValueGap(game);

  const bool ma = out.ma.verdict == Verdict::kProved;
  const bool mb = out.mb.verdict == Verdict::kProved;
  t.envelope_duality = t.inf_compact_a;
  t.value_exists = t.inf_compact_a && ma;
  t.value_exists_symmetric = t.inf_compact_a && t.sup_compact_b && (ma || mb);
  t.solution_exists = t.inf_compact_a && t.sup_compact_b && ma && mb;

  const PureValueGap& gap = *out.pure_gap;
  if (gap.saddle) {
    out.pure = PureSolution::kExists;
  } else if (gap.lower.value.is_finite() && gap.upper.value.is_finite() &&
             gap.upper.value.value() - gap.lower.value.value() > kGapTolerance) {
    out.pure = PureSolution::kNone;
  } else if (gap.lower.value < gap.upper.value) {
    out.pure = PureSolution::kNone;
  }
  if (!t.inf_compact_a) {
    out.notes.push_back("a -> c(a, b) is not coercive on A");
  }
  if (t.value_exists && !t.solution_exists) {
    out.notes.push_back("value exists; a solution pair is not guaranteed");
  }
  return out;
}

}  // namespace zsg
