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

#ifndef ZSG_MEASURE_HPP_
#define ZSG_MEASURE_HPP_

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "zsg/action_set.hpp"

namespace zsg {

struct Atom {
  double point = 0.0;
  double weight = 0.0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

// Probability measure with finite support, kept in canonical form: atoms
// sorted by point, pairwise separated by more than kMergeDistance, weights
// positive and summing to one within kWeightTolerance.
class FiniteSupportMeasure {
 public:
  static constexpr double kMergeDistance = 1e-12;
  static constexpr double kWeightTolerance = 1e-12;

  // Canonicalizes; throws DomainError on nonpositive weights, empty input
  // or a total weight away from one.
  explicit FiniteSupportMeasure(std::vector<Atom> atoms);

  static FiniteSupportMeasure Dirac(double point);
  // Drops atoms with weight below `min_weight` and rescales the rest.
  static FiniteSupportMeasure Normalized(std::vector<Atom> atoms,
                                         double min_weight = 0.0);
  // t * first + (1 - t) * second.
  static FiniteSupportMeasure Mixture(double t,
                                      const FiniteSupportMeasure& first,
                                      const FiniteSupportMeasure& second);

  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool is_dirac() const { return atoms_.size() == 1; }
  double min_point() const { return atoms_.front().point; }
  double max_point() const { return atoms_.back().point; }

  // Mass of atoms with point <= x.
  double cdf(double x) const;
  // Mass of atoms with point in [lo, hi].
  double mass_in(double lo, double hi) const;

  // Throws DomainError unless every atom lies in `set`.
  void require_on(const ActionSet& set, const char* who) const;

  friend bool operator==(const FiniteSupportMeasure&,
                         const FiniteSupportMeasure&) = default;

  // "0.4:0,0.6:1" (weight:point pairs).
  std::string to_string() const;

 private:
  std::vector<Atom> atoms_;
};

// Density proportional to 1 / (1 + t^2) on a half-line [lo, +inf) or on the
// whole line. Substituting t = tan(theta) turns integrals against it into
// integrals over a bounded angle range with constant weight `normalizer()`.
class HeavyTailMeasure {
 public:
  // `support` must be a half-line or the full line.
  explicit HeavyTailMeasure(ActionSet support);

  const ActionSet& support() const { return support_; }
  // 1 / integral of 1/(1+t^2) over the support: 2/pi on [0, inf), 1/pi on R.
  double normalizer() const { return normalizer_; }
  double density(double t) const;
  double theta_lower() const;
  double theta_upper() const;

  void require_on(const ActionSet& set, const char* who) const;

  friend bool operator==(const HeavyTailMeasure&,
                         const HeavyTailMeasure&) = default;

  std::string to_string() const;

 private:
  ActionSet support_;
  double normalizer_;
};

using Strategy = std::variant<FiniteSupportMeasure, HeavyTailMeasure>;

}  // namespace zsg

#endif  // ZSG_MEASURE_HPP_
