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

#ifndef ZSG_MATRIX_GAME_HPP_
#define ZSG_MATRIX_GAME_HPP_

#include <cstddef>
#include <vector>

#include "zsg/game.hpp"

namespace zsg {

enum class LpStatus { kOptimal, kIterationLimit };

// Row player minimizes, column player maximizes.
struct MatrixGameResult {
  double value = 0.0;
  std::vector<double> row_strategy;
  std::vector<double> col_strategy;
  // max_j (p^T C)_j - min_i (C q)_i.
  double duality_gap = 0.0;
  LpStatus status = LpStatus::kOptimal;
  std::size_t pivots = 0;
};

// C[i][j] = c(grid_a[i], grid_b[j]); rows computed on up to `jobs` threads.
Matrix TabulateMatrix(const Game& game, const std::vector<double>& grid_a,
                      const std::vector<double>& grid_b, std::size_t jobs = 1);

// Simplex on the shifted-positive LP. Throws Error(kNumerical) when the
// iteration cap is hit before the duality gap falls to `tol`; the partial
// result is not returned in that case unless `allow_partial` is set.
MatrixGameResult SolveMatrixGame(const Matrix& c, double tol = 1e-9,
                                 bool allow_partial = false);

}  // namespace zsg

#endif  // ZSG_MATRIX_GAME_HPP_
