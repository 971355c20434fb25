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

#include "zsg/game.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zsg/error.hpp"

namespace zsg {
namespace {

const Polynomial kCubic{0, -1, 0, 1};

Game Cubic() {
  return Game(ActionSet::HalfLine(0), ActionSet::HalfLine(0), DifferenceForm{kCubic});
}

TEST(GameTest, EvaluatesEachForm) {
  EXPECT_EQ(EvalPayoff(Cubic(), 1, 0), 0.0);
  const Game q(ActionSet::FullLine(), ActionSet::FullLine(), QuadraticDifference{});
  EXPECT_EQ(EvalPayoff(q, 2, 1), 3.0);
  const Game m = Game::FromMatrix(Matrix::FromRows({{2, -1}, {-1, 1}}));
  EXPECT_EQ(EvalPayoff(m, 0, 1), -1.0);
  const Game s(ActionSet::FullLine(), ActionSet::FullLine(),
               SeparableForm{Polynomial{0, 0, 1}, Polynomial{0, 0, -1}, 4});
  EXPECT_EQ(EvalPayoff(s, 1, 2), 1.0);
}

TEST(GameTest, OutOfSetActionsAreDomainErrors) {
  EXPECT_THROW(EvalPayoff(Cubic(), -1, 0), DomainError);
  const Game m = Game::FromMatrix(Matrix::FromRows({{1, 2}}));
  EXPECT_THROW(EvalPayoff(m, 0, 2), DomainError);
  EXPECT_THROW(EvalPayoff(m, 0, 0.5), DomainError);
}

TEST(GameTest, ValidityFollowsTheTails) {
  EXPECT_TRUE(Cubic().validity().valid());

  const Game square(ActionSet::HalfLine(0), ActionSet::HalfLine(0),
                    DifferenceForm{Polynomial{0, 0, 1}});
  EXPECT_TRUE(square.validity().bounded_below_in_a);
  EXPECT_FALSE(square.validity().bounded_above_in_b);
  ASSERT_EQ(square.validity().reasons.size(), 1u);
  EXPECT_NE(square.validity().reasons[0].find("condition (v) violated"),
            std::string::npos);

  const Game neg_cube(ActionSet::HalfLine(0), ActionSet::HalfLine(0),
                      DifferenceForm{Polynomial{0, 0, 0, -1}});
  EXPECT_FALSE(neg_cube.validity().bounded_below_in_a);
  EXPECT_FALSE(neg_cube.validity().bounded_above_in_b);
  EXPECT_EQ(neg_cube.validity().reasons.size(), 2u);

  const Game sep(ActionSet::FullLine(), ActionSet::FullLine(),
                 SeparableForm{Polynomial{0, 1}, Polynomial{0, 0, -1}, 0});
  EXPECT_FALSE(sep.validity().bounded_below_in_a);
  EXPECT_TRUE(sep.validity().bounded_above_in_b);
}

TEST(GameTest, SwapIsAnInvolutionWithTheSignRule) {
  const Game g = Cubic();
  const Game s = SwapPlayers(g);
  // Odd phi is a fixed point of the swap.
  EXPECT_EQ(std::get<DifferenceForm>(s.payoff()).phi, kCubic);
  EXPECT_EQ(SwapPlayers(s), g);

  const Game m = Game::FromMatrix(Matrix::FromRows({{2, -1}, {-1, 1}}));
  const Game ms = SwapPlayers(m);
  EXPECT_EQ(std::get<MatrixForm>(ms.payoff()).entries,
            Matrix::FromRows({{-2, 1}, {1, -1}}));
  EXPECT_EQ(SwapPlayers(ms), m);

  const Game d(ActionSet::HalfLine(1), ActionSet::Interval(-1, 2),
               DifferenceForm{Polynomial{1, 2, 3, 4}});
  const Game ds = SwapPlayers(d);
  EXPECT_EQ(ds.action_a(), d.action_b());
  EXPECT_EQ(std::get<DifferenceForm>(ds.payoff()).phi, (Polynomial{-1, 2, -3, 4}));
  EXPECT_EQ(SwapPlayers(ds), d);
}

TEST(GameTest, SwapNegatesEveryPayoff) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0, 3);
  const Game sep(ActionSet::HalfLine(0), ActionSet::HalfLine(0),
                 SeparableForm{Polynomial{1, 0, 1}, Polynomial{0, 2, -1}, 0.5});
  for (const Game& g : {Cubic(), sep}) {
    const Game s = SwapPlayers(g);
    for (int k = 0; k < 100; ++k) {
      const double a = u(rng);
      const double b = u(rng);
      EXPECT_NEAR(s.payoff_unchecked(b, a), -g.payoff_unchecked(a, b), 1e-12);
    }
  }
}

TEST(GameTest, SlicesAgreeWithThePayoff) {
  const Game q(ActionSet::FullLine(), ActionSet::FullLine(), QuadraticDifference{});
  for (const Game& g : {Cubic(), q}) {
    for (double x : {0.0, 0.5, 2.0}) {
      for (double y : {0.0, 1.5, 3.0}) {
        EXPECT_NEAR(SliceInB(g, x)(y), g.payoff_unchecked(x, y), 1e-12);
        EXPECT_NEAR(SliceInA(g, y)(x), g.payoff_unchecked(x, y), 1e-12);
      }
    }
  }
}

TEST(GameTest, ShapeMismatchesAreRejected) {
  EXPECT_ANY_THROW(Game(ActionSet::Finite(2), ActionSet::Finite(3),
                        MatrixForm{Matrix::FromRows({{1, 2}, {3, 4}})}));
  EXPECT_ANY_THROW(Game(ActionSet::FullLine(), ActionSet::FullLine(),
                        MatrixForm{Matrix::FromRows({{1}})}));
  EXPECT_ANY_THROW(Matrix::FromRows({{1, 2}, {3}}));
}

}  // namespace
}  // namespace zsg
