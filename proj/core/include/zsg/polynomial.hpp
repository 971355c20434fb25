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

#ifndef ZSG_POLYNOMIAL_HPP_
#define ZSG_POLYNOMIAL_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "zsg/extended_value.hpp"

namespace zsg {

// Dense real polynomial with coefficients in ascending powers. Trailing exact
// zeros are trimmed on construction, so the leading coefficient is nonzero
// unless the polynomial is the constant zero.
class Polynomial {
 public:
  Polynomial() : coefficients_{0.0} {}
  explicit Polynomial(std::vector<double> ascending);
  Polynomial(std::initializer_list<double> ascending)
      : Polynomial(std::vector<double>(ascending)) {}

  static Polynomial Constant(double c) { return Polynomial({c}); }
  static Polynomial Monomial(std::size_t power, double coefficient = 1.0);

  std::size_t degree() const { return coefficients_.size() - 1; }
  double leading() const { return coefficients_.back(); }
  double coefficient(std::size_t power) const {
    return power < coefficients_.size() ? coefficients_[power] : 0.0;
  }
  std::span<const double> coefficients() const { return coefficients_; }
  bool is_constant() const { return coefficients_.size() == 1; }

  double operator()(double s) const;  // Horner
  Polynomial derivative() const;

  // t -> p(scale * t + offset).
  Polynomial compose_affine(double scale, double offset) const;
  // s -> -p(-s): the payoff polynomial seen from the other player.
  Polynomial reflected_negation() const;

  // Limit of p(s) as s -> -inf (side < 0) or s -> +inf (side > 0).
  ExtendedValue tail(int side) const;

  // 1 + sum |a_n / a_M| over n < M: every real root lies in (-radius, radius).
  // Constants report 0.
  double cauchy_radius() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(double k, const Polynomial& p);
  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }

  friend bool operator==(const Polynomial& p, const Polynomial& q) = default;

  // Human-readable form such as "s^3 - s".
  std::string to_string(const char* variable = "s") const;

 private:
  void Trim();

  std::vector<double> coefficients_;
};

}  // namespace zsg

#endif  // ZSG_POLYNOMIAL_HPP_
