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

#include "zsg/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "format.hpp"
#include "zsg/error.hpp"

namespace zsg {

FiniteSupportMeasure::FiniteSupportMeasure(std::vector<Atom> atoms) {
  if (atoms.empty()) throw DomainError("measure needs at least one atom");
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.point)) throw DomainError("non-finite atom point");
    if (!(a.weight > 0.0) || !std::isfinite(a.weight)) {
      throw DomainError("atom weights must be positive and finite");
    }
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) {
    return x.point < y.point || (x.point == y.point && x.weight < y.weight);
  });
  // Merge runs of points within kMergeDistance of the run's first point.
  atoms_.reserve(atoms.size());
  for (const Atom& a : atoms) {
    if (!atoms_.empty() && a.point - atoms_.back().point <= kMergeDistance) {
      atoms_.back().weight += a.weight;
    } else {
      atoms_.push_back(a);
    }
  }
  double total = 0.0;
  for (const Atom& a : atoms_) total += a.weight;
  if (std::abs(total - 1.0) > kWeightTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "atom weights sum to " << total << ", not 1";
    throw DomainError(os.str());
  }
}

FiniteSupportMeasure FiniteSupportMeasure::Dirac(double point) {
  return FiniteSupportMeasure({{point, 1.0}});
}

FiniteSupportMeasure FiniteSupportMeasure::Normalized(std::vector<Atom> atoms,
                                                      double min_weight) {
  std::erase_if(atoms, [&](const Atom& a) {
    return !(a.weight > 0.0) || a.weight < min_weight;
  });
  if (atoms.empty()) throw DomainError("no atom survives normalization");
  double total = 0.0;
  for (const Atom& a : atoms) total += a.weight;
  for (Atom& a : atoms) a.weight /= total;
  return FiniteSupportMeasure(std::move(atoms));
}

FiniteSupportMeasure FiniteSupportMeasure::Mixture(
    double t, const FiniteSupportMeasure& first,
    const FiniteSupportMeasure& second) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("mixture weight outside [0,1]");
  std::vector<Atom> atoms;
  for (const Atom& a : first.atoms_) {
    if (t > 0.0) atoms.push_back({a.point, t * a.weight});
  }
  for (const Atom& a : second.atoms_) {
    if (t < 1.0) atoms.push_back({a.point, (1.0 - t) * a.weight});
  }
  return Normalized(std::move(atoms));
}

double FiniteSupportMeasure::cdf(double x) const {
  double mass = 0.0;
  for (const Atom& a : atoms_) {
    if (a.point > x) break;
    mass += a.weight;
  }
  return mass;
}

double FiniteSupportMeasure::mass_in(double lo, double hi) const {
  double mass = 0.0;
  for (const Atom& a : atoms_) {
    if (a.point >= lo && a.point <= hi) mass += a.weight;
  }
  return mass;
}

void FiniteSupportMeasure::require_on(const ActionSet& set,
                                      const char* who) const {
  for (const Atom& a : atoms_) set.require(a.point, who);
}

std::string FiniteSupportMeasure::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) os << ",";
    os << detail::Shortest(atoms_[i].weight) << ":" << detail::Shortest(atoms_[i].point);
  }
  return os.str();
}

HeavyTailMeasure::HeavyTailMeasure(ActionSet support)
    : support_(support), normalizer_(0.0) {
  switch (support_.kind()) {
    case ActionSet::Kind::kHalfLine:
      normalizer_ = 1.0 / (std::numbers::pi / 2.0 - std::atan(support_.lower()));
      break;
    case ActionSet::Kind::kFullLine:
      normalizer_ = 1.0 / std::numbers::pi;
      break;
    default:
      throw DomainError("rational-tail measure needs an unbounded support");
  }
}

double HeavyTailMeasure::density(double t) const {
  if (!support_.contains(t)) return 0.0;
  return normalizer_ / (1.0 + t * t);
}

double HeavyTailMeasure::theta_lower() const {
  return support_.kind() == ActionSet::Kind::kFullLine
             ? -std::numbers::pi / 2.0
             : std::atan(support_.lower());
}

double HeavyTailMeasure::theta_upper() const { return std::numbers::pi / 2.0; }

void HeavyTailMeasure::require_on(const ActionSet& set, const char* who) const {
  const bool inside =
      set.kind() == ActionSet::Kind::kFullLine ||
      (set.kind() == ActionSet::Kind::kHalfLine &&
       support_.kind() == ActionSet::Kind::kHalfLine &&
       support_.lower() >= set.lower());
  if (!inside) {
    throw DomainError(std::string(who) + " rational-tail measure on " +
                      support_.to_string() + " is not supported by " +
                      set.to_string());
  }
}

std::string HeavyTailMeasure::to_string() const {
  return "rational_tail:" + support_.to_string();
}

}  // namespace zsg
