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

#ifndef ZSG_TOOLS_CONFIG_HPP_
#define ZSG_TOOLS_CONFIG_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zsg/game.hpp"
#include "zsg/parametric.hpp"
#include "zsg/solver.hpp"

namespace zsg::cli {

// Config format: one [game] or [family] section of whitespace-separated
// key=value tokens; '#' starts a comment. Tokens may share a line.
//
//   [game]
//   form=difference action_set_a=halfline:0 action_set_b=halfline:0
//   phi=0,-1,0,1
//
// Keys
//   form          difference | separable | quadratic | matrix        [game]
//                 shifted_difference | separable_family            [family]
//   action_set_a  halfline:<lo> | fullline | interval:<lo>:<hi>
//   action_set_b  (default halfline:0 for difference forms, else fullline)
//   phi           ascending coefficients, comma separated
//   phi_a phi_b   separable parts; phi_x for separable_family
//   shift         constant of the separable form (default 0)
//   matrix        rows separated by ';', entries by ','
//   psi           coefficients | sin | step:<at>:<height>
//                 | table:<start>:<step>:<v0>,<v1>,...
//   x_grid        <start>,<stop>,<count>                           [family]
//   tol R0 R_growth h0 h_shrink max_rounds boundary_mass_eps       solver
//   lip           Lipschitz allowance of the continuity report     [family]
struct ParsedConfig {
  bool is_family = false;
  std::optional<Game> game;
  std::optional<GameFamily> family;
  std::vector<double> x_grid;
  SolverConfig solver;
  double lip = 10.0;
  // Canonical text: fixed key order, defaults made explicit, numbers in
  // shortest round-trip form. Parsing it gives back the same config.
  std::string normalized;
};

// Throws Error(kConfig) with a "line N: " prefix when the line is known.
ParsedConfig ParseConfig(std::string_view text);

// Shortest decimal that reads back to the same double.
std::string FormatNumber(double v);

// "0.4:0,0.6:1" (weight:point pairs).
FiniteSupportMeasure ParseStrategy(std::string_view text);

std::vector<double> ParseNumberList(std::string_view text);

}  // namespace zsg::cli

#endif  // ZSG_TOOLS_CONFIG_HPP_
