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

#include "zsg/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zsg/error.hpp"

namespace zsg {

Polynomial::Polynomial(std::vector<double> ascending)
    : coefficients_(std::move(ascending)) {
  if (coefficients_.empty()) {
    throw DomainError("polynomial needs at least one coefficient");
  }
  for (double c : coefficients_) {
    if (!std::isfinite(c)) throw DomainError("non-finite polynomial coefficient");
  }
  Trim();
}

Polynomial Polynomial::Monomial(std::size_t power, double coefficient) {
  std::vector<double> c(power + 1, 0.0);
  c[power] = coefficient;
  return Polynomial(std::move(c));
}

void Polynomial::Trim() {
  while (coefficients_.size() > 1 && coefficients_.back() == 0.0) {
    coefficients_.pop_back();
  }
}

double Polynomial::operator()(double s) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * s + *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (is_constant()) return Polynomial();
  std::vector<double> d(coefficients_.size() - 1);
  for (std::size_t n = 1; n < coefficients_.size(); ++n) {
    d[n - 1] = static_cast<double>(n) * coefficients_[n];
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::compose_affine(double scale, double offset) const {
  // Horner in polynomial arithmetic: acc = acc * (scale t + offset) + a_n.
  const Polynomial inner({offset, scale});
  Polynomial acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * inner + Constant(*it);
  }
  return acc;
}

Polynomial Polynomial::reflected_negation() const {
  std::vector<double> c(coefficients_);
  for (std::size_t n = 0; n < c.size(); ++n) {
    // (-1)^(n+1) a_n; keep +0.0 out of -0.0 for clean equality.
    if (n % 2 == 0) c[n] = -c[n];
    if (c[n] == 0.0) c[n] = 0.0;
  }
  return Polynomial(std::move(c));
}

ExtendedValue Polynomial::tail(int side) const {
  if (is_constant()) return ExtendedValue::Finite(coefficients_[0]);
  const bool odd = degree() % 2 == 1;
  const bool positive = leading() > 0;
  const bool goes_up = side > 0 ? positive : (odd ? !positive : positive);
  return goes_up ? ExtendedValue::PlusInfinity()
                 : ExtendedValue::MinusInfinity();
}

double Polynomial::cauchy_radius() const {
  if (is_constant()) return 0.0;
  const double lead = std::abs(leading());
  double sum = 0.0;
  for (std::size_t n = 0; n + 1 < coefficients_.size(); ++n) {
    sum += std::abs(coefficients_[n]) / lead;
  }
  return 1.0 + sum;
}

Polynomial Polynomial::operator-() const { return -1.0 * *this; }

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<double> c(std::max(p.coefficients_.size(), q.coefficients_.size()),
                        0.0);
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] = p.coefficient(n) + q.coefficient(n);
  }
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  return p + (-q);
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  std::vector<double> c(p.coefficients_.size() + q.coefficients_.size() - 1,
                        0.0);
  for (std::size_t i = 0; i < p.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < q.coefficients_.size(); ++j) {
      c[i + j] += p.coefficients_[i] * q.coefficients_[j];
    }
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(double k, const Polynomial& p) {
  std::vector<double> c(p.coefficients_);
  for (double& x : c) {
    x *= k;
    if (x == 0.0) x = 0.0;
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const char* variable) const {
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    const double c = coefficients_[k];
    if (c == 0.0 && !(first && k == 0)) continue;
    const double mag = std::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1.0) os << mag;
    if (k >= 1) os << variable;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

}  // namespace zsg
