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

#ifndef ZSG_DIAGNOSE_HPP_
#define ZSG_DIAGNOSE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zsg/assumptions.hpp"
#include "zsg/game.hpp"

namespace zsg {

// Which existence results apply to a game.
struct TheoremFlags {
  // a -> c(a, b) tends to +inf at every infinite end of A (so its sublevel
  // sets are compact).
  bool inf_compact_a = false;
  // b -> c(a, b) tends to -inf at every infinite end of B.
  bool sup_compact_b = false;
  // Envelope minimax: inf over mixed a of csharp equals the upper value.
  bool envelope_duality = false;
  // The game has a value (Ma side).
  bool value_exists = false;
  // The game has a value, with both compactness conditions and one of Ma/Mb.
  bool value_exists_symmetric = false;
  // The game has a value and a solution pair (both Ma and Mb).
  bool solution_exists = false;
};

enum class PureSolution { kExists, kNone, kUnknown };

const char* PureSolutionName(PureSolution p);

struct DiagnoseReport {
  std::string form;
  ValidityRecord validity;
  // Tail limits of phi for difference forms.
  std::optional<std::pair<ExtendedValue, ExtendedValue>> tails;
  std::optional<Decomposition> decomposition;
  AssumptionCheck ma;
  AssumptionCheck mb;
  std::optional<PureObstruction> obstruction;
  std::optional<PureValueGap> pure_gap;
  TheoremFlags theorems;
  PureSolution pure = PureSolution::kUnknown;
  std::vector<std::string> notes;
};

// a -> c(a, b) -> +inf at each infinite end of A (true for finite sets).
bool InfCompactInA(const Game& game);

DiagnoseReport Diagnose(const Game& game);

}  // namespace zsg

#endif  // ZSG_DIAGNOSE_HPP_
