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

#ifndef ZSG_GAME_HPP_
#define ZSG_GAME_HPP_

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "zsg/action_set.hpp"
#include "zsg/polynomial.hpp"

namespace zsg {

// Row-major dense matrix of finite reals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  // Throws DomainError on ragged input or non-finite entries.
  static Matrix FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix transposed() const;
  // (j, i) entry is -(i, j): the same game seen by the other player.
  Matrix negated_transpose() const;
  double min_entry() const;
  double max_entry() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// c(a, b) = phi(a - b).
struct DifferenceForm {
  Polynomial phi;
  friend bool operator==(const DifferenceForm&, const DifferenceForm&) = default;
};

// c(a, b) = shift + phi_a(a) + phi_b(b).
struct SeparableForm {
  Polynomial phi_a;
  Polynomial phi_b;
  double shift = 0.0;
  friend bool operator==(const SeparableForm&, const SeparableForm&) = default;
};

// c(a, b) = a^2 - b^2.
struct QuadraticDifference {
  friend bool operator==(const QuadraticDifference&,
                         const QuadraticDifference&) = default;
};

// c(i, j) = entries(i, j); actions are the indices 0..n-1.
struct MatrixForm {
  Matrix entries;
  friend bool operator==(const MatrixForm&, const MatrixForm&) = default;
};

using PayoffForm =
    std::variant<DifferenceForm, SeparableForm, QuadraticDifference, MatrixForm>;

std::string FormName(const PayoffForm& form);

// Outcome of the two boundedness conditions every game must satisfy:
// a -> c(a, b) bounded below for each b, and b -> c(a, b) bounded above for
// each a.
struct ValidityRecord {
  bool bounded_below_in_a = true;
  bool bounded_above_in_b = true;
  std::vector<std::string> reasons;  // one line per failed condition

  bool valid() const { return bounded_below_in_a && bounded_above_in_b; }
};

// Player I picks a in action_a and pays Player II the amount c(a, b).
// Player I minimizes, Player II maximizes. Immutable once built.
class Game {
 public:
  // Throws DomainError when the form does not fit the action sets (matrix
  // forms need index sets of matching sizes; polynomial forms need
  // continuous sets).
  Game(ActionSet action_a, ActionSet action_b, PayoffForm payoff);

  // Matrix game on index sets sized from the matrix.
  static Game FromMatrix(Matrix entries);

  const ActionSet& action_a() const { return action_a_; }
  const ActionSet& action_b() const { return action_b_; }
  const PayoffForm& payoff() const { return payoff_; }
  const ValidityRecord& validity() const { return validity_; }
  bool is_matrix() const { return std::holds_alternative<MatrixForm>(payoff_); }

  // c(a, b) without membership checks.
  double payoff_unchecked(double a, double b) const;

  friend bool operator==(const Game& x, const Game& y) {
    return x.action_a_ == y.action_a_ && x.action_b_ == y.action_b_ &&
           x.payoff_ == y.payoff_;
  }

 private:
  ActionSet action_a_;
  ActionSet action_b_;
  PayoffForm payoff_;
  ValidityRecord validity_;
};

// c(a, b); throws DomainError for actions outside their sets.
double EvalPayoff(const Game& game, double a, double b);

// The game with the players exchanged: {B, A, (b, a) -> -c(a, b)}.
Game SwapPlayers(const Game& game);

// Decides both boundedness conditions analytically from the form.
ValidityRecord ValidateGame(const ActionSet& action_a,
                            const ActionSet& action_b, const PayoffForm& form);
inline ValidityRecord ValidateGame(const Game& game) {
  return ValidateGame(game.action_a(), game.action_b(), game.payoff());
}

// b -> c(a, b) and a -> c(a, b) as polynomials. Throws UnsupportedError for
// matrix forms.
Polynomial SliceInB(const Game& game, double a);
Polynomial SliceInA(const Game& game, double b);

}  // namespace zsg

#endif  // ZSG_GAME_HPP_
