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

#include "zsg/expected_payoff.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zsg/error.hpp"

namespace zsg {
namespace {

Game Cubic() {
  return Game(ActionSet::HalfLine(0), ActionSet::HalfLine(0),
              DifferenceForm{Polynomial{0, -1, 0, 1}});
}

Game SmallMatrix() { return Game::FromMatrix(Matrix::FromRows({{2, -1}, {-1, 1}})); }

TEST(ExpectedPayoffTest, FiniteSupportPairsMatchTheDoubleSum) {
  std::mt19937 rng(5);
  const Game q(ActionSet::FullLine(), ActionSet::FullLine(), QuadraticDifference{});
  for (const Game& g : {Cubic(), q}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto mu_a = testing::RandomMeasure(rng, 0, 3);
      const auto mu_b = testing::RandomMeasure(rng, 0, 3);
      const ExtendedValue v = ExpectedPayoff(g, mu_a, mu_b);
      ASSERT_TRUE(v.is_finite());
      const double want = testing::DoubleSum(g, mu_a, mu_b);
      EXPECT_NEAR(v.value(), want, 1e-12 * std::max(1.0, std::abs(want)));
      // Sign rule under the swap.
      const ExtendedValue s = ExpectedPayoff(SwapPlayers(g), mu_b, mu_a);
      EXPECT_NEAR(s.value(), -v.value(), 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST(ExpectedPayoffTest, QuadraticExample) {
  const Game q(ActionSet::FullLine(), ActionSet::FullLine(), QuadraticDifference{});
  const FiniteSupportMeasure mu_b({{0, 0.5}, {2, 0.5}});
  EXPECT_EQ(ExpectedPayoff(q, FiniteSupportMeasure::Dirac(1), mu_b),
            ExtendedValue::Finite(-1));
}

TEST(ExpectedPayoffTest, HeavyTailClassification) {
  const HeavyTailMeasure half(ActionSet::HalfLine(0));
  const HeavyTailMeasure line(ActionSet::FullLine());
  const Game square(ActionSet::HalfLine(0), ActionSet::HalfLine(0),
                    DifferenceForm{Polynomial{0, 0, 1}});
  EXPECT_TRUE(ExpectedPayoff(square, FiniteSupportMeasure::Dirac(0), half).is_plus_infinity());

  const Game cube(ActionSet::FullLine(), ActionSet::FullLine(),
                  DifferenceForm{Polynomial{0, 0, 0, 1}});
  EXPECT_TRUE(ExpectedPayoff(cube, line, line).is_undefined());
  const PayoffParts parts = ExpectedPayoffParts(cube, FiniteSupportMeasure::Dirac(0), line);
  EXPECT_TRUE(parts.positive.is_plus_infinity());
  EXPECT_TRUE(parts.negative.is_minus_infinity());

  const Game constant(ActionSet::HalfLine(0), ActionSet::HalfLine(0),
                      DifferenceForm{Polynomial{3}});
  EXPECT_NEAR(ExpectedPayoff(constant, FiniteSupportMeasure::Dirac(1), half).value(), 3, 1e-8);

  const Game neg(ActionSet::HalfLine(0), ActionSet::HalfLine(0),
                 DifferenceForm{Polynomial{0, 0, -1}});
  EXPECT_TRUE(
      ExpectedPayoffParts(neg, FiniteSupportMeasure::Dirac(0), half).negative.is_minus_infinity());

  EXPECT_THROW(ExpectedPayoff(SmallMatrix(), FiniteSupportMeasure::Dirac(0), half),
               UnsupportedError);
}

}  // namespace
}  // namespace zsg
