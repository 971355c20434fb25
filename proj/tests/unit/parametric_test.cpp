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

#include "zsg/parametric.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "zsg/assumptions.hpp"
#include "zsg/reports.hpp"

namespace zsg {
namespace {

const Polynomial kCubic{0, -1, 0, 1};

GameFamily ShiftedCubic(ParameterFunction psi) {
  return {ActionSet::HalfLine(0), ActionSet::HalfLine(0),
          ShiftedDifference{std::move(psi), kCubic}};
}

GameFamily SeparableSquares() {
  return {ActionSet::FullLine(), ActionSet::FullLine(),
          SeparableFamily{Polynomial{0, 0, 1}, Polynomial{0, 0, 1}, Polynomial{0, 0, -1}}};
}

TEST(ParameterFunctionTest, Kinds) {
  const auto sine = ParameterFunction::Sine();
  for (double x : {-3.0, -1.0, 0.0, 0.5, 2.0, 7.0}) EXPECT_NEAR(sine(x), std::sin(x), 1e-8);
  const auto step = ParameterFunction::Step(0, 5);
  EXPECT_EQ(step(-1e-9), 0.0);
  EXPECT_EQ(step(0), 5.0);
  const auto table = ParameterFunction::Tabulated(0, 1, {0, 2, 6});
  EXPECT_EQ(table(0.5), 1.0);
  EXPECT_EQ(table(1.5), 4.0);
  EXPECT_EQ(table(-3), 0.0);
  EXPECT_EQ(table(9), 6.0);
  EXPECT_EQ(ParameterFunction::FromPolynomial(Polynomial{1, 2})(3), 7.0);
  EXPECT_EQ(step.to_string(), "step:0:5");
  EXPECT_EQ(sine.to_string(), "sin");
}

TEST(FamilyTest, InstancesFollowTheParameter) {
  const Game g = ShiftedCubic(ParameterFunction::Step(0, 5)).At(1);
  EXPECT_EQ(g.payoff_unchecked(2, 1), 5.0);
  const Game s = SeparableSquares().At(2);
  EXPECT_EQ(s.payoff_unchecked(1, 1), 4.0);
}

TEST(FamilyTest, SolveAtExamples) {
  const auto fam = ShiftedCubic(ParameterFunction::Sine());
  const SweepRecord at0 = SolveFamilyAt(fam, 0, {});
  ASSERT_TRUE(at0.ok);
  EXPECT_LE(std::abs(at0.solution.value_estimate), 1e-2);
  const SweepRecord at1 = SolveFamilyAt(fam, M_PI / 2, {});
  ASSERT_TRUE(at1.ok);
  EXPECT_NEAR(at1.solution.value_estimate, 1.0, at1.solution.certified_gap() + 1e-9);

  const SweepRecord sep = SolveFamilyAt(SeparableSquares(), 2, {});
  ASSERT_TRUE(sep.ok);
  EXPECT_NEAR(sep.solution.value_estimate, 4.0, 1e-9);
  EXPECT_EQ(sep.pure, PureSolution::kExists);
  EXPECT_EQ(sep.solution.strategy_a, FiniteSupportMeasure::Dirac(0));
}

TEST(FamilyTest, InvalidInstancesBecomeFailures) {
  const GameFamily fam{ActionSet::HalfLine(0), ActionSet::HalfLine(0),
                       ShiftedDifference{ParameterFunction::Sine(), Polynomial{0, 0, 1}}};
  const SweepRecord r = SolveFamilyAt(fam, 0, {});
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.failure.empty());
}

TEST(SweepTest, ShiftSeparability) {
  const auto fam = ShiftedCubic(ParameterFunction::Sine());
  const auto grid = LinearGrid(-M_PI, M_PI, 9);
  const auto records = Sweep(fam, grid, {});
  ASSERT_EQ(records.size(), grid.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    ASSERT_TRUE(records[i].ok);
    for (std::size_t j = 0; j < records.size(); ++j) {
      const double dv =
          records[i].solution.value_estimate - records[j].solution.value_estimate;
      const double gaps =
          records[i].solution.certified_gap() + records[j].solution.certified_gap();
      EXPECT_NEAR(dv, std::sin(grid[i]) - std::sin(grid[j]), gaps + 1e-6);
    }
  }
}

TEST(SweepTest, DeterministicAcrossThreadCounts) {
  const auto fam = ShiftedCubic(ParameterFunction::Sine());
  const auto grid = LinearGrid(-1, 1, 5);
  const auto one = Sweep(fam, grid, {}, 1);
  const auto four = Sweep(fam, grid, {}, 4);
  EXPECT_EQ(SweepCsv(one), SweepCsv(four));
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(TraceCsv(one[i].solution), TraceCsv(four[i].solution));
  }
}

TEST(SweepTest, ConstantFamilyIsConstant) {
  const auto fam = ShiftedCubic(ParameterFunction::FromPolynomial(Polynomial{0}));
  const auto records = Sweep(fam, {-1, 0, 2}, {});
  for (const auto& r : records) {
    EXPECT_EQ(r.solution.value_estimate, records[0].solution.value_estimate);
    EXPECT_EQ(r.solution.strategy_a, records[0].solution.strategy_a);
  }
  const ContinuityReport c = MakeContinuityReport(records);
  EXPECT_TRUE(c.flags.empty());
  EXPECT_LE(c.max_jump, 2 * c.max_gap);
  const CanonicalSelection sel = SelectCanonical(records);
  ASSERT_EQ(sel.selections.size(), 3u);
  EXPECT_EQ(sel.selections[2].strategy_b, sel.selections[0].strategy_b);
}

TEST(SweepTest, SeparableValuesAndSelector) {
  const auto records = Sweep(SeparableSquares(), {-1, 0, 1}, {});
  const double want[] = {1, 0, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(records[i].solution.value_estimate, want[i],
                records[i].solution.certified_gap() + 1e-9);
  }
  const CanonicalSelection sel = SelectCanonical(records);
  for (const Selection& s : sel.selections) {
    ASSERT_TRUE(s.pure.has_value());
    EXPECT_EQ(*s.pure, std::make_pair(0.0, 0.0));
    const PureValueGap gap = ComputePureValueGap(SeparableSquares().At(s.x));
    ASSERT_TRUE(gap.saddle.has_value());
    EXPECT_EQ(*gap.saddle, *s.pure);
  }
  const UscReport usc = MakeUscReport(records);
  EXPECT_EQ(usc.support_flags, 0u);
  for (const UscPair& p : usc.pairs) {
    EXPECT_EQ(p.support_deviation_a, 0.0);
    EXPECT_EQ(p.cdf_distance_b, 0.0);
  }
}

TEST(SweepTest, MonotoneFamilySelectsTheOrigin) {
  const GameFamily fam{ActionSet::HalfLine(0), ActionSet::HalfLine(0),
                       ShiftedDifference{ParameterFunction::Sine(), Polynomial{0, 1}}};
  const CanonicalSelection sel = SelectCanonical(Sweep(fam, {-1, 0, 1}, {}));
  ASSERT_EQ(sel.selections.size(), 3u);
  for (const Selection& s : sel.selections) EXPECT_EQ(*s.pure, std::make_pair(0.0, 0.0));
}

TEST(ContinuityTest, StepFamilyIsFlagged) {
  const auto grid = LinearGrid(-M_PI, M_PI, 33);
  const auto smooth = Sweep(ShiftedCubic(ParameterFunction::Sine()), grid, {});
  const ContinuityReport c = MakeContinuityReport(smooth);
  EXPECT_TRUE(c.flags.empty());
  double max_dx = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) max_dx = std::max(max_dx, grid[i + 1] - grid[i]);
  EXPECT_LE(c.max_jump, max_dx + 2 * c.max_gap);

  const auto stepped = Sweep(ShiftedCubic(ParameterFunction::Step(0, 5)), grid, {});
  const ContinuityReport s = MakeContinuityReport(stepped);
  ASSERT_FALSE(s.flags.empty());
  for (const ContinuityFlag& f : s.flags) {
    EXPECT_LT(grid[f.index], 0.0);
    EXPECT_GE(grid[f.index + 1], 0.0);
  }
  EXPECT_GE(MakeUscReport(stepped).value_flags, 1u);
}

TEST(SeparableWitnessTest, ClosedFormLMakesTheMaInequalityHold) {
  const double gamma = 0.5;
  for (const Polynomial& phi_x : {Polynomial{0, 0, 1}, Polynomial{-3, 1}}) {
    const SeparableFamily form{phi_x, Polynomial{1, 0, 1}, Polynomial{0, 0, -1}};
    const GameFamily fam{ActionSet::FullLine(), ActionSet::FullLine(), form};
    for (double x = -4; x <= 4; x += 0.5) {
      // b0 = 0 maximizes phi_b; inf phi_a = 1.
      const double k = phi_x(x) + 1 + 0;
      AssumptionWitness w;
      w.side = AssumptionSide::kMa;
      w.gamma = gamma;
      w.anchor = 0;
      w.L = (gamma - 1) * std::min(k, 0.0) + gamma;
      ASSERT_GT(w.L, 0);
      const Game g = fam.At(x);
      for (double a = -10; a <= 10; a += 0.01) {
        EXPECT_GE(WitnessSlack(g, w, a), -1e-12) << "x=" << x << " a=" << a;
      }
    }
  }
}

}  // namespace
}  // namespace zsg
