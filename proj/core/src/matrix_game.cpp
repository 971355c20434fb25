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

#include "zsg/matrix_game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zsg/error.hpp"
#include "zsg/parallel.hpp"

namespace zsg {
namespace {

constexpr double kPivotEps = 1e-12;
constexpr double kCostEps = 1e-12;

// Dense tableau for: maximize sum(y) s.t. D y <= 1, y >= 0, with D > 0.
// y / sum(y) minimizes max_i (D y)_i; the slack duals give the maximizer.
// Columns 0..n-1 are y, n..n+m-1 the slacks, n+m the right-hand side.
class Tableau {
 public:
  explicit Tableau(const Matrix& d)
      : m_(d.rows()), n_(d.cols()), width_(n_ + m_ + 1),
        rows_((m_ + 1) * width_, 0.0), basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = d(i, j);
      at(i, n_ + i) = 1.0;
      at(i, n_ + m_) = 1.0;
      basis_[i] = n_ + i;
    }
    for (std::size_t j = 0; j < n_; ++j) at(m_, j) = -1.0;
  }

  // Runs to optimality or until `max_pivots`; returns true at optimality.
  bool Run(std::size_t max_pivots) {
    while (pivots_ < max_pivots) {
      std::size_t enter = DantzigColumn();
      if (enter == kNone) return true;
      std::size_t leave = RatioRow(enter);
      if (leave == kNone) {
        throw Error(ErrorCategory::kNumerical, "matrix-game LP is unbounded");
      }
      // Every degenerate pivot uses Bland's rule, so no cycle can form.
      if (at(leave, n_ + m_) <= kPivotEps) {
        enter = BlandColumn();
        leave = RatioRow(enter);
      }
      Pivot(leave, enter);
      ++pivots_;
    }
    return DantzigColumn() == kNone;
  }

  std::vector<double> Primal() const {
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) y[basis_[i]] = std::max(0.0, at(i, n_ + m_));
    }
    return y;
  }
  std::vector<double> Dual() const {
    std::vector<double> x(m_);
    for (std::size_t i = 0; i < m_; ++i) x[i] = std::max(0.0, at(m_, n_ + i));
    return x;
  }
  std::size_t pivots() const { return pivots_; }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  double& at(std::size_t i, std::size_t j) { return rows_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const { return rows_[i * width_ + j]; }

  std::size_t DantzigColumn() const {
    std::size_t best = kNone;
    double most = -kCostEps;
    for (std::size_t j = 0; j + 1 < width_; ++j) {
      if (at(m_, j) < most) {
        most = at(m_, j);
        best = j;
      }
    }
    return best;
  }
  std::size_t BlandColumn() const {
    for (std::size_t j = 0; j + 1 < width_; ++j) {
      if (at(m_, j) < -kCostEps) return j;
    }
    return kNone;
  }
  // Minimum ratio; ties go to the smallest basic variable index.
  std::size_t RatioRow(std::size_t col) const {
    std::size_t best = kNone;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m_; ++i) {
      const double a = at(i, col);
      if (a <= kPivotEps) continue;
      const double r = at(i, n_ + m_) / a;
      if (best == kNone || r < best_ratio ||
          (r == best_ratio && basis_[i] < basis_[best])) {
        best_ratio = r;
        best = i;
      }
    }
    return best;
  }
  void Pivot(std::size_t row, std::size_t col) {
    double* pr = &rows_[row * width_];
    const double inv = 1.0 / pr[col];
    for (std::size_t j = 0; j < width_; ++j) pr[j] *= inv;
    pr[col] = 1.0;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row) continue;
      double* ri = &rows_[i * width_];
      const double f = ri[col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) ri[j] -= f * pr[j];
      ri[col] = 0.0;
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<double> rows_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

std::vector<double> Normalize(std::vector<double> w) {
  double total = 0.0;
  for (double v : w) total += v;
  for (double& v : w) v /= total;
  return w;
}

}  // namespace

Matrix TabulateMatrix(const Game& game, const std::vector<double>& grid_a,
                      const std::vector<double>& grid_b, std::size_t jobs) {
  for (double a : grid_a) game.action_a().require(a, "player I grid");
  for (double b : grid_b) game.action_b().require(b, "player II grid");
  Matrix c(grid_a.size(), grid_b.size());
  ParallelFor(grid_a.size(), jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < grid_b.size(); ++j) {
      const double v = game.payoff_unchecked(grid_a[i], grid_b[j]);
      if (!std::isfinite(v)) {
        throw Error(ErrorCategory::kNumerical, "non-finite payoff entry");
      }
      c(i, j) = v;
    }
  });
  return c;
}

MatrixGameResult SolveMatrixGame(const Matrix& c, double tol,
                                 bool allow_partial) {
  if (c.rows() == 0 || c.cols() == 0) throw DomainError("empty payoff matrix");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  const std::size_t m = c.rows();
  const std::size_t n = c.cols();
  MatrixGameResult out;

  const double lo = c.min_entry();
  const double range = c.max_entry() - lo;
  if (range == 0.0) {
    out.value = lo;
    out.row_strategy.assign(m, 0.0);
    out.col_strategy.assign(n, 0.0);
    out.row_strategy[0] = out.col_strategy[0] = 1.0;
    return out;
  }
  // The LP's primal variable minimizes the worst row of its matrix, so the
  // tableau holds the transpose: primal = row player, dual = column player.
  // Entries rescaled into [1, 2] keep it well conditioned.
  Matrix d(n, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) d(j, i) = 1.0 + (c(i, j) - lo) / range;
  }
  Tableau t(d);
  const bool optimal = t.Run(100 * (m + n) + 1000);
  out.pivots = t.pivots();
  out.row_strategy = Normalize(t.Primal());
  out.col_strategy = Normalize(t.Dual());

  double upper = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    double v = 0.0;
    for (std::size_t i = 0; i < m; ++i) v += out.row_strategy[i] * c(i, j);
    upper = std::max(upper, v);
  }
  double lower = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    double v = 0.0;
    for (std::size_t j = 0; j < n; ++j) v += c(i, j) * out.col_strategy[j];
    lower = std::min(lower, v);
  }
  out.duality_gap = std::max(0.0, upper - lower);
  out.value = 0.5 * (upper + lower);
  if (!optimal || out.duality_gap > tol) {
    out.status = LpStatus::kIterationLimit;
    if (!allow_partial) {
      throw Error(ErrorCategory::kNumerical,
                  "matrix-game LP did not reach the requested duality gap");
    }
  }
  return out;
}

}  // namespace zsg
