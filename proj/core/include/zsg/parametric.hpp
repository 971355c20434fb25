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

#ifndef ZSG_PARAMETRIC_HPP_
#define ZSG_PARAMETRIC_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zsg/diagnose.hpp"
#include "zsg/game.hpp"
#include "zsg/solver.hpp"

namespace zsg {

// psi(x): a polynomial or a table with linear interpolation.
class ParameterFunction {
 public:
  static ParameterFunction FromPolynomial(Polynomial p);
  // sin tabulated on [0, 2pi) at 1e-4 resolution, periodic.
  static ParameterFunction Sine();
  // 0 for x < at, height for x >= at.
  static ParameterFunction Step(double at, double height);
  // values[k] at start + k * step; linear in between, clamped outside.
  static ParameterFunction Tabulated(double start, double step,
                                     std::vector<double> values);

  double operator()(double x) const;

  // Config spelling: coefficient list, "sin", "step:<at>:<height>" or
  // "table:<start>:<step>:<v0>,<v1>,...".
  std::string to_string() const;

  friend bool operator==(const ParameterFunction& x,
                         const ParameterFunction& y) {
    return x.to_string() == y.to_string();
  }

 private:
  enum class Kind { kPolynomial, kSine, kStep, kTable };
  struct Table {
    double start = 0.0;
    double step = 1.0;
    std::vector<double> values;
    bool periodic = false;
  };

  Kind kind_ = Kind::kPolynomial;
  Polynomial poly_;
  double step_at_ = 0.0;
  double step_height_ = 0.0;
  std::shared_ptr<const Table> table_;
};

// c(x, a, b) = psi(x) + phi(a - b).
struct ShiftedDifference {
  ParameterFunction psi;
  Polynomial phi;
};

// c(x, a, b) = phi_x(x) + phi_a(a) + phi_b(b).
struct SeparableFamily {
  Polynomial phi_x;
  Polynomial phi_a;
  Polynomial phi_b;
};

struct GameFamily {
  ActionSet action_a = ActionSet::FullLine();
  ActionSet action_b = ActionSet::FullLine();
  std::variant<ShiftedDifference, SeparableFamily> form;

  Game At(double x) const;
};

struct SweepRecord {
  double x = 0.0;
  bool ok = false;
  std::string failure;  // set when !ok
  GameSolution solution;
  TheoremFlags theorems;
  PureSolution pure = PureSolution::kUnknown;
};

SweepRecord SolveFamilyAt(const GameFamily& family, double x,
                          const SolverConfig& cfg);

// One record per x in input order; x values are solved on up to `jobs`
// threads and the output does not depend on `jobs`.
std::vector<SweepRecord> Sweep(const GameFamily& family,
                               const std::vector<double>& x_grid,
                               const SolverConfig& cfg, std::size_t jobs = 1);

// `count` evenly spaced points from start to stop inclusive.
std::vector<double> LinearGrid(double start, double stop, std::size_t count);

struct ContinuityFlag {
  std::size_t index = 0;  // pair (index, index + 1)
  double jump = 0.0;
  double threshold = 0.0;
};

// Empirical check only: a flag marks a suspected discontinuity.
struct ContinuityReport {
  std::vector<double> jumps;   // |v(x_{i+1}) - v(x_i)|
  std::vector<double> moduli;  // jump / |dx|
  std::vector<ContinuityFlag> flags;
  double max_jump = 0.0;
  double max_gap = 0.0;
  double lipschitz = 10.0;
};

ContinuityReport MakeContinuityReport(const std::vector<SweepRecord>& records,
                                      double lipschitz = 10.0);

struct UscPair {
  std::size_t index = 0;
  double support_deviation_a = 0.0;
  double support_deviation_b = 0.0;
  double cdf_distance_a = 0.0;
  double cdf_distance_b = 0.0;
  bool support_flag = false;
  bool value_flag = false;
};

// Compares the single computed solution per x; it tests a necessary
// consequence of upper semicontinuity of the solution sets, not the
// property itself.
struct UscReport {
  std::vector<UscPair> pairs;
  std::vector<double> probes;  // 64 points
  std::size_t support_flags = 0;
  std::size_t value_flags = 0;
  std::string header;
};

UscReport MakeUscReport(const std::vector<SweepRecord>& records,
                        double lipschitz = 10.0);

struct Selection {
  double x = 0.0;
  FiniteSupportMeasure strategy_a = FiniteSupportMeasure::Dirac(0.0);
  FiniteSupportMeasure strategy_b = FiniteSupportMeasure::Dirac(0.0);
  std::optional<std::pair<double, double>> pure;  // when both are Dirac
};

struct CanonicalSelection {
  std::vector<Selection> selections;
  std::vector<std::string> omitted;  // one notice per skipped record
};

CanonicalSelection SelectCanonical(const std::vector<SweepRecord>& records);

}  // namespace zsg

#endif  // ZSG_PARAMETRIC_HPP_
