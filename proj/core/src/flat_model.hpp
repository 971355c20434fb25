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

#ifndef ZSG_SRC_FLAT_MODEL_HPP_
#define ZSG_SRC_FLAT_MODEL_HPP_

// Piecewise-polynomial description of b -> cflat(delta_b) for the
// polynomial payoff forms. Internal to the assumptions and pure-value code.

#include <vector>

#include "zsg/game.hpp"
#include "zsg/polynomial.hpp"

namespace zsg::detail {

// Sign of p(b) as direction * b -> +inf; 0 only for the zero polynomial.
int EventualSign(const Polynomial& p, int direction);

// The piece that is smallest as direction * b -> +inf.
const Polynomial& EventualMin(const std::vector<Polynomial>& pieces,
                              int direction);

// Every polynomial that can realize cflat(b) somewhere on B, plus the points
// where the set of realizing pieces may change.
struct FlatPieces {
  std::vector<Polynomial> pieces;
  std::vector<double> switch_points;
};

FlatPieces AllFlatPieces(const Game& game);

// For direction * b >= radius, cflat(b) = min over `pieces` (or -inf when
// `minus_infinity`).
struct FlatAsymptote {
  bool minus_infinity = false;
  std::vector<Polynomial> pieces;
  double radius = 0.0;
};

FlatAsymptote FlatTailModel(const Game& game, int direction);

// Largest Cauchy radius over the nonconstant differences p - base.
double SeparationRadius(const std::vector<Polynomial>& pieces,
                        const Polynomial& base);

}  // namespace zsg::detail

#endif  // ZSG_SRC_FLAT_MODEL_HPP_
