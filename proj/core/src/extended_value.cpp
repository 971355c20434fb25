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

#include "zsg/extended_value.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "zsg/error.hpp"

namespace zsg {

const char* CategoryName(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kDomain:
      return "domain";
    case ErrorCategory::kUnsupported:
      return "unsupported";
    case ErrorCategory::kInvalidGame:
      return "invalid-game";
    case ErrorCategory::kRefused:
      return "refused";
    case ErrorCategory::kConfig:
      return "config";
    case ErrorCategory::kNumerical:
      return "numerical";
  }
  return "unknown";
}

ExtendedValue ExtendedValue::FromDouble(double v) {
  if (std::isnan(v)) throw std::domain_error("ExtendedValue from NaN");
  if (std::isinf(v)) return v > 0 ? PlusInfinity() : MinusInfinity();
  return Finite(v);
}

double ExtendedValue::value() const {
  if (kind_ != Kind::kFinite) {
    throw std::logic_error("ExtendedValue::value on " + to_string());
  }
  return value_;
}

double ExtendedValue::to_double() const {
  switch (kind_) {
    case Kind::kFinite:
      return value_;
    case Kind::kPlusInfinity:
      return std::numeric_limits<double>::infinity();
    case Kind::kMinusInfinity:
      return -std::numeric_limits<double>::infinity();
    case Kind::kUndefined:
      break;
  }
  throw std::domain_error("Undefined extended value has no numeric view");
}

ExtendedValue ExtendedValue::operator-() const {
  switch (kind_) {
    case Kind::kFinite:
      return Finite(-value_);
    case Kind::kPlusInfinity:
      return MinusInfinity();
    case Kind::kMinusInfinity:
      return PlusInfinity();
    case Kind::kUndefined:
      return Undefined();
  }
  return Undefined();
}

ExtendedValue operator+(const ExtendedValue& x, const ExtendedValue& y) {
  using K = ExtendedValue::Kind;
  if (x.kind_ == K::kUndefined || y.kind_ == K::kUndefined) {
    return ExtendedValue::Undefined();
  }
  const bool plus = x.kind_ == K::kPlusInfinity || y.kind_ == K::kPlusInfinity;
  const bool minus =
      x.kind_ == K::kMinusInfinity || y.kind_ == K::kMinusInfinity;
  if (plus && minus) return ExtendedValue::Undefined();
  if (plus) return ExtendedValue::PlusInfinity();
  if (minus) return ExtendedValue::MinusInfinity();
  return ExtendedValue::Finite(x.value_ + y.value_);
}

ExtendedValue ExtendedValue::scaled(double factor) const {
  if (kind_ == Kind::kFinite) return Finite(value_ * factor);
  if (kind_ == Kind::kUndefined) return Undefined();
  if (factor == 0.0) return Finite(0.0);
  return factor > 0 ? *this : -*this;
}

std::partial_ordering operator<=>(const ExtendedValue& x,
                                  const ExtendedValue& y) {
  if (x.is_undefined() || y.is_undefined()) {
    throw std::domain_error("comparison with an Undefined extended value");
  }
  return x.to_double() <=> y.to_double();
}

bool operator==(const ExtendedValue& x, const ExtendedValue& y) {
  if (x.kind_ != y.kind_) return false;
  return x.kind_ != ExtendedValue::Kind::kFinite || x.value_ == y.value_;
}

std::string ExtendedValue::to_string() const {
  switch (kind_) {
    case Kind::kFinite: {
      std::ostringstream os;
      os.precision(17);
      os << value_;
      return os.str();
    }
    case Kind::kPlusInfinity:
      return "+inf";
    case Kind::kMinusInfinity:
      return "-inf";
    case Kind::kUndefined:
      return "undefined";
  }
  return "undefined";
}

}  // namespace zsg
