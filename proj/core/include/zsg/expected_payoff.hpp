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

#ifndef ZSG_EXPECTED_PAYOFF_HPP_
#define ZSG_EXPECTED_PAYOFF_HPP_

#include "zsg/extended_value.hpp"
#include "zsg/game.hpp"
#include "zsg/measure.hpp"

namespace zsg {

// The expected payoff split into its positive and negative parts. `total`
// is their extended sum; it is Undefined exactly when positive = +inf and
// negative = -inf.
struct PayoffParts {
  ExtendedValue positive;  // integral of c^+, in [0, +inf]
  ExtendedValue negative;  // integral of c^- = min(c, 0), in [-inf, 0]
  ExtendedValue total;
};

PayoffParts ExpectedPayoffParts(const Game& game, const Strategy& mu_a,
                                const Strategy& mu_b);

// Finite-support pairs give an exact finite sum. A rational-tail side is
// classified by tail degree before any quadrature runs. Throws
// UnsupportedError for matrix games paired with rational-tail measures and
// DomainError for measures outside their action sets.
inline ExtendedValue ExpectedPayoff(const Game& game, const Strategy& mu_a,
                                    const Strategy& mu_b) {
  return ExpectedPayoffParts(game, mu_a, mu_b).total;
}

}  // namespace zsg

#endif  // ZSG_EXPECTED_PAYOFF_HPP_
