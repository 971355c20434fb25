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

#include "zsg/roots.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

namespace zsg {
namespace {

TEST(RealRootsTest, FindsKnownRoots) {
  const Polynomial p = Polynomial{-3, 1} * Polynomial{2, 1} * Polynomial{-0.5, 1};
  const auto r = RealRoots(p, -INFINITY, INFINITY);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0], -2, 1e-10);
  EXPECT_NEAR(r[1], 0.5, 1e-10);
  EXPECT_NEAR(r[2], 3, 1e-10);
  const auto clipped = RealRoots(p, 0, 1);
  ASSERT_EQ(clipped.size(), 1u);
  EXPECT_NEAR(clipped[0], 0.5, 1e-10);
}

TEST(RealRootsTest, CriticalPointsOfTheCubic) {
  const auto r = RealRoots(Polynomial{-1, 0, 3}, -INFINITY, INFINITY);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0], -1 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(r[1], 1 / std::sqrt(3.0), 1e-12);
  EXPECT_TRUE(RealRoots(Polynomial{1, 0, 1}, -INFINITY, INFINITY).empty());
}

// Oracle: every sign change on a fine grid must be matched by a reported
// root in that cell.
TEST(RealRootsTest, MatchesGridSignChangesOnRandomPolynomials) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> root(-4, 4);
  std::uniform_int_distribution<int> degree(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial p{1.0};
    const int n = degree(rng);
    for (int k = 0; k < n; ++k) p = p * Polynomial{-root(rng), 1};
    const auto roots = RealRoots(p, -5, 5);
    const int cells = 20000;
    for (int k = 0; k < cells; ++k) {
      const double x0 = -5 + 10.0 * k / cells;
      const double x1 = -5 + 10.0 * (k + 1) / cells;
      if (p(x0) * p(x1) < 0) {
        bool found = false;
        for (double r : roots) found = found || (r >= x0 - 1e-9 && r <= x1 + 1e-9);
        EXPECT_TRUE(found) << p.to_string() << " cell " << x0;
      }
    }
    for (double r : roots) {
      EXPECT_LE(std::abs(p(r)), 1e-6 * (1 + std::abs(p.derivative()(r))));
    }
  }
}

}  // namespace
}  // namespace zsg
