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

#include "zsg/action_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "format.hpp"
#include "zsg/error.hpp"

namespace zsg {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Grid points built as lo + k*h may land an ulp outside a closed end.
bool AtLeast(double x, double lo) {
  return x >= lo - 1e-12 * std::max(1.0, std::abs(lo));
}
bool AtMost(double x, double hi) {
  return x <= hi + 1e-12 * std::max(1.0, std::abs(hi));
}

}  // namespace

ActionSet ActionSet::HalfLine(double lower) {
  if (!std::isfinite(lower)) throw DomainError("half-line needs a finite end");
  return ActionSet(Kind::kHalfLine, lower, kInf, 0);
}

ActionSet ActionSet::FullLine() {
  return ActionSet(Kind::kFullLine, -kInf, kInf, 0);
}

ActionSet ActionSet::Interval(double lower, double upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower < upper)) {
    throw DomainError("interval needs finite ends with lower < upper");
  }
  return ActionSet(Kind::kInterval, lower, upper, 0);
}

ActionSet ActionSet::Finite(std::size_t count) {
  if (count == 0) throw DomainError("finite action set must be nonempty");
  return ActionSet(Kind::kFinite, 0.0, static_cast<double>(count - 1), count);
}

double ActionSet::lower() const { return lo_; }
double ActionSet::upper() const { return hi_; }

bool ActionSet::contains(double x) const {
  if (std::isnan(x)) return false;
  switch (kind_) {
    case Kind::kHalfLine:
      return std::isfinite(x) && AtLeast(x, lo_);
    case Kind::kFullLine:
      return std::isfinite(x);
    case Kind::kInterval:
      return AtLeast(x, lo_) && AtMost(x, hi_);
    case Kind::kFinite:
      return x >= 0.0 && x <= hi_ && std::floor(x) == x;
  }
  return false;
}

void ActionSet::require(double x, const char* who) const {
  if (!contains(x)) {
    std::ostringstream os;
    os.precision(17);
    os << who << " action " << x << " is outside " << to_string();
    throw DomainError(os.str());
  }
}

double ActionSet::clamp(double x) const {
  if (kind_ == Kind::kFinite) {
    const double r = std::floor(x + 0.5);
    return std::min(std::max(r, 0.0), hi_);
  }
  return std::min(std::max(x, lo_), hi_);
}

std::string ActionSet::to_string() const {
  using detail::Shortest;
  std::ostringstream os;
  switch (kind_) {
    case Kind::kHalfLine:
      os << "halfline:" << Shortest(lo_);
      break;
    case Kind::kFullLine:
      os << "fullline";
      break;
    case Kind::kInterval:
      os << "interval:" << Shortest(lo_) << ":" << Shortest(hi_);
      break;
    case Kind::kFinite:
      os << "finite:" << count_;
      break;
  }
  return os.str();
}

}  // namespace zsg
