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

#ifndef ZSG_EXTENDED_VALUE_HPP_
#define ZSG_EXTENDED_VALUE_HPP_

#include <compare>
#include <string>

namespace zsg {

// A value of an expected payoff: a finite real, one of the two infinities,
// or Undefined (the sum of a divergent positive part and a divergent
// negative part). Arithmetic never produces NaN; comparisons involving
// Undefined throw.
class ExtendedValue {
 public:
  enum class Kind { kFinite, kPlusInfinity, kMinusInfinity, kUndefined };

  constexpr ExtendedValue() = default;

  static constexpr ExtendedValue Finite(double v) {
    return ExtendedValue(Kind::kFinite, v);
  }
  static constexpr ExtendedValue PlusInfinity() {
    return ExtendedValue(Kind::kPlusInfinity, 0.0);
  }
  static constexpr ExtendedValue MinusInfinity() {
    return ExtendedValue(Kind::kMinusInfinity, 0.0);
  }
  static constexpr ExtendedValue Undefined() {
    return ExtendedValue(Kind::kUndefined, 0.0);
  }
  // Maps IEEE +-inf to the corresponding infinity; NaN is rejected.
  static ExtendedValue FromDouble(double v);

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_plus_infinity() const {
    return kind_ == Kind::kPlusInfinity;
  }
  constexpr bool is_minus_infinity() const {
    return kind_ == Kind::kMinusInfinity;
  }
  constexpr bool is_undefined() const { return kind_ == Kind::kUndefined; }

  // Finite payload. Throws std::logic_error on non-finite values.
  double value() const;

  // IEEE view: +-inf for the infinities. Throws on Undefined.
  double to_double() const;

  ExtendedValue operator-() const;
  friend ExtendedValue operator+(const ExtendedValue& x,
                                 const ExtendedValue& y);
  friend ExtendedValue operator-(const ExtendedValue& x,
                                 const ExtendedValue& y) {
    return x + (-y);
  }
  ExtendedValue scaled(double factor) const;  // factor >= 0 or finite value

  // Throws std::domain_error if either side is Undefined.
  friend std::partial_ordering operator<=>(const ExtendedValue& x,
                                           const ExtendedValue& y);
  friend bool operator==(const ExtendedValue& x, const ExtendedValue& y);

  std::string to_string() const;

 private:
  constexpr ExtendedValue(Kind kind, double v) : kind_(kind), value_(v) {}

  Kind kind_ = Kind::kFinite;
  double value_ = 0.0;
};

}  // namespace zsg

#endif  // ZSG_EXTENDED_VALUE_HPP_
