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

#include "zsg/game.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zsg/error.hpp"

namespace zsg {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::FromRows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw DomainError("matrix must have at least one row and column");
  }
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      std::ostringstream os;
      os << "matrix row " << i << " has " << rows[i].size()
         << " entries, expected " << m.cols_;
      throw DomainError(os.str());
    }
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (!std::isfinite(rows[i][j])) throw DomainError("non-finite matrix entry");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::negated_transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const double v = -(*this)(i, j);
      t(j, i) = v == 0.0 ? 0.0 : v;
    }
  }
  return t;
}

double Matrix::min_entry() const {
  return *std::min_element(data_.begin(), data_.end());
}

double Matrix::max_entry() const {
  return *std::max_element(data_.begin(), data_.end());
}

std::string FormName(const PayoffForm& form) {
  struct Visitor {
    std::string operator()(const DifferenceForm&) const { return "difference"; }
    std::string operator()(const SeparableForm&) const { return "separable"; }
    std::string operator()(const QuadraticDifference&) const {
      return "quadratic";
    }
    std::string operator()(const MatrixForm&) const { return "matrix"; }
  };
  return std::visit(Visitor{}, form);
}

namespace {

void CheckShape(const ActionSet& a, const ActionSet& b, const PayoffForm& form) {
  if (const auto* m = std::get_if<MatrixForm>(&form)) {
    if (!a.is_finite() || !b.is_finite() || a.count() != m->entries.rows() ||
        b.count() != m->entries.cols()) {
      throw DomainError("matrix form needs index action sets matching its shape");
    }
    return;
  }
  if (a.is_finite() || b.is_finite()) {
    throw DomainError(FormName(form) + " form needs continuous action sets");
  }
}

// True when p is bounded below (side_sign = -1) or above (+1) on the set.
bool BoundedOn(const Polynomial& p, const ActionSet& set, int side_sign) {
  const ExtendedValue bad = side_sign < 0 ? ExtendedValue::MinusInfinity()
                                          : ExtendedValue::PlusInfinity();
  if (!set.bounded_above() && p.tail(+1) == bad) return false;
  if (!set.bounded_below() && p.tail(-1) == bad) return false;
  return true;
}

}  // namespace

ValidityRecord ValidateGame(const ActionSet& action_a,
                            const ActionSet& action_b, const PayoffForm& form) {
  ValidityRecord record;
  if (const auto* d = std::get_if<DifferenceForm>(&form)) {
    const Polynomial& phi = d->phi;
    // a - b runs to +inf when A is unbounded above and to -inf when A is
    // unbounded below; b drives a - b the opposite way.
    bool below = true;
    if (!action_a.bounded_above() && phi.tail(+1).is_minus_infinity()) {
      below = false;
    }
    if (!action_a.bounded_below() && phi.tail(-1).is_minus_infinity()) {
      below = false;
    }
    bool above = true;
    if (!action_b.bounded_above() && phi.tail(-1).is_plus_infinity()) {
      above = false;
    }
    if (!action_b.bounded_below() && phi.tail(+1).is_plus_infinity()) {
      above = false;
    }
    record.bounded_below_in_a = below;
    record.bounded_above_in_b = above;
    if (!below) {
      record.reasons.push_back(
          "condition (iv) violated: a -> phi(a - b) is unbounded below on A "
          "for phi = " + phi.to_string());
    }
    if (!above) {
      record.reasons.push_back(
          "condition (v) violated: b -> phi(a - b) is unbounded above on B "
          "for phi = " + phi.to_string());
    }
  } else if (const auto* s = std::get_if<SeparableForm>(&form)) {
    record.bounded_below_in_a = BoundedOn(s->phi_a, action_a, -1);
    record.bounded_above_in_b = BoundedOn(s->phi_b, action_b, +1);
    if (!record.bounded_below_in_a) {
      record.reasons.push_back(
          "condition (iv) violated: phi_a = " + s->phi_a.to_string("a") +
          " is unbounded below on A");
    }
    if (!record.bounded_above_in_b) {
      record.reasons.push_back(
          "condition (v) violated: phi_b = " + s->phi_b.to_string("b") +
          " is unbounded above on B");
    }
  }
  // a^2 - b^2 and finite matrices always satisfy both conditions.
  return record;
}

Game::Game(ActionSet action_a, ActionSet action_b, PayoffForm payoff)
    : action_a_(action_a), action_b_(action_b), payoff_(std::move(payoff)) {
  CheckShape(action_a_, action_b_, payoff_);
  validity_ = ValidateGame(action_a_, action_b_, payoff_);
}

Game Game::FromMatrix(Matrix entries) {
  const std::size_t rows = entries.rows();
  const std::size_t cols = entries.cols();
  return Game(ActionSet::Finite(rows), ActionSet::Finite(cols),
              MatrixForm{std::move(entries)});
}

double Game::payoff_unchecked(double a, double b) const {
  struct Visitor {
    double a, b;
    double operator()(const DifferenceForm& f) const { return f.phi(a - b); }
    double operator()(const SeparableForm& f) const {
      return f.shift + f.phi_a(a) + f.phi_b(b);
    }
    double operator()(const QuadraticDifference&) const { return a * a - b * b; }
    double operator()(const MatrixForm& f) const {
      return f.entries(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    }
  };
  return std::visit(Visitor{a, b}, payoff_);
}

double EvalPayoff(const Game& game, double a, double b) {
  game.action_a().require(a, "player I");
  game.action_b().require(b, "player II");
  return game.payoff_unchecked(a, b);
}

Game SwapPlayers(const Game& game) {
  struct Visitor {
    PayoffForm operator()(const DifferenceForm& f) const {
      // -phi(a - b) = -phi(-(b - a)).
      return DifferenceForm{f.phi.reflected_negation()};
    }
    PayoffForm operator()(const SeparableForm& f) const {
      const double shift = f.shift == 0.0 ? 0.0 : -f.shift;
      return SeparableForm{-f.phi_b, -f.phi_a, shift};
    }
    PayoffForm operator()(const QuadraticDifference&) const {
      return QuadraticDifference{};  // -(a^2 - b^2) = b^2 - a^2
    }
    PayoffForm operator()(const MatrixForm& f) const {
      return MatrixForm{f.entries.negated_transpose()};
    }
  };
  return Game(game.action_b(), game.action_a(),
              std::visit(Visitor{}, game.payoff()));
}

Polynomial SliceInB(const Game& game, double a) {
  struct Visitor {
    double a;
    Polynomial operator()(const DifferenceForm& f) const {
      return f.phi.compose_affine(-1.0, a);
    }
    Polynomial operator()(const SeparableForm& f) const {
      return f.phi_b + Polynomial::Constant(f.shift + f.phi_a(a));
    }
    Polynomial operator()(const QuadraticDifference&) const {
      return Polynomial({a * a, 0.0, -1.0});
    }
    Polynomial operator()(const MatrixForm&) const {
      throw UnsupportedError("matrix payoff has no polynomial slice");
    }
  };
  return std::visit(Visitor{a}, game.payoff());
}

Polynomial SliceInA(const Game& game, double b) {
  struct Visitor {
    double b;
    Polynomial operator()(const DifferenceForm& f) const {
      return f.phi.compose_affine(1.0, -b);
    }
    Polynomial operator()(const SeparableForm& f) const {
      return f.phi_a + Polynomial::Constant(f.shift + f.phi_b(b));
    }
    Polynomial operator()(const QuadraticDifference&) const {
      return Polynomial({-b * b, 0.0, 1.0});
    }
    Polynomial operator()(const MatrixForm&) const {
      throw UnsupportedError("matrix payoff has no polynomial slice");
    }
  };
  return std::visit(Visitor{b}, game.payoff());
}

}  // namespace zsg
