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

#ifndef ZSG_ROOTS_HPP_
#define ZSG_ROOTS_HPP_

#include <vector>

#include "zsg/polynomial.hpp"

namespace zsg {

// Sign-changing real roots of p in [lower, upper], ascending. Infinite bounds
// are clipped to the Cauchy radius of p. Roots of p' split the range into
// monotone pieces, so every sign change is bracketed exactly once and then
// bisected to a width of `tolerance` (relative for roots away from zero).
// Roots of even multiplicity are reported only when p vanishes exactly at a
// split point; callers use these roots as extremum candidates, where such
// roots never matter.
std::vector<double> RealRoots(const Polynomial& p, double lower, double upper,
                              double tolerance = 1e-12);

}  // namespace zsg

#endif  // ZSG_ROOTS_HPP_
