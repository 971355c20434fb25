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
#include <stdexcept>

#include <gtest/gtest.h>

namespace zsg {
namespace {

using EV = ExtendedValue;

TEST(ExtendedValueTest, ArithmeticFollowsTheSplittingRule) {
  EXPECT_EQ(EV::PlusInfinity() + EV::Finite(3), EV::PlusInfinity());
  EXPECT_EQ(EV::Finite(3) + EV::MinusInfinity(), EV::MinusInfinity());
  EXPECT_TRUE((EV::PlusInfinity() + EV::MinusInfinity()).is_undefined());
  EXPECT_TRUE((EV::Undefined() + EV::Finite(1)).is_undefined());
  EXPECT_EQ(EV::Finite(2) + EV::Finite(-5), EV::Finite(-3));
  EXPECT_EQ(-EV::PlusInfinity(), EV::MinusInfinity());
}

TEST(ExtendedValueTest, ComparisonsWithUndefinedThrow) {
  EXPECT_TRUE(EV::Finite(1) < EV::PlusInfinity());
  EXPECT_TRUE(EV::MinusInfinity() < EV::Finite(-1e300));
  EXPECT_THROW((void)(EV::Undefined() < EV::Finite(0)), std::domain_error);
}

TEST(ExtendedValueTest, ConversionsAndText) {
  EXPECT_EQ(EV::FromDouble(INFINITY), EV::PlusInfinity());
  EXPECT_EQ(EV::FromDouble(-INFINITY), EV::MinusInfinity());
  EXPECT_ANY_THROW(EV::FromDouble(std::nan("")));
  EXPECT_EQ(EV::PlusInfinity().to_string(), "+inf");
  EXPECT_EQ(EV::Undefined().to_string(), "undefined");
  EXPECT_ANY_THROW(EV::PlusInfinity().value());
  EXPECT_EQ(EV::MinusInfinity().to_double(), -INFINITY);
}

TEST(ExtendedValueTest, ScalingKeepsInfinities) {
  EXPECT_EQ(EV::Finite(2).scaled(0.5), EV::Finite(1));
  EXPECT_EQ(EV::PlusInfinity().scaled(0.25), EV::PlusInfinity());
}

}  // namespace
}  // namespace zsg
