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

#ifndef ZSG_ACTION_SET_HPP_
#define ZSG_ACTION_SET_HPP_

#include <cstddef>
#include <string>

namespace zsg {

// A closed subset of the real line available to one player: [lo, +inf),
// the whole line, a compact interval [lo, hi], or the index set {0..n-1}
// used by matrix games.
class ActionSet {
 public:
  enum class Kind { kHalfLine, kFullLine, kInterval, kFinite };

  static ActionSet HalfLine(double lower);
  static ActionSet FullLine();
  static ActionSet Interval(double lower, double upper);
  static ActionSet Finite(std::size_t count);

  Kind kind() const { return kind_; }
  // -inf / +inf for unbounded ends. Finite sets report 0 and count - 1.
  double lower() const;
  double upper() const;
  bool bounded_below() const { return kind_ != Kind::kFullLine; }
  bool bounded_above() const {
    return kind_ == Kind::kInterval || kind_ == Kind::kFinite;
  }
  std::size_t count() const { return count_; }  // kFinite only
  bool is_finite() const { return kind_ == Kind::kFinite; }

  bool contains(double x) const;
  // Throws DomainError naming `who` when x is outside the set.
  void require(double x, const char* who) const;

  // Point of the set closest to x (ties go to the smaller point).
  double clamp(double x) const;

  friend bool operator==(const ActionSet&, const ActionSet&) = default;

  // "halfline:0", "fullline", "interval:-1:2", "finite:3".
  std::string to_string() const;

 private:
  ActionSet(Kind kind, double lo, double hi, std::size_t count)
      : kind_(kind), lo_(lo), hi_(hi), count_(count) {}

  Kind kind_;
  double lo_;
  double hi_;
  std::size_t count_;
};

}  // namespace zsg

#endif  // ZSG_ACTION_SET_HPP_
