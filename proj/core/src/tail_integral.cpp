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

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "zsg/envelopes.hpp"
#include "zsg/roots.hpp"

namespace zsg {
namespace {

// Integral of max(q, 0) against the measure, assuming it converges. With
// t = tan(theta) the density becomes the constant normalizer, and q^+ is
// bounded on the angle range because it vanishes near every infinite end
// where q is unbounded. Roots of q are the kinks of q^+; they split the
// range so each Gauss-Kronrod panel sees a smooth integrand.
double PositivePartIntegral(const Polynomial& q, const HeavyTailMeasure& m) {
  if (q.is_constant()) return std::max(q.coefficient(0), 0.0);
  const double lower_t = m.support().lower();
  std::vector<double> cuts{m.theta_lower()};
  for (double r : RealRoots(q, lower_t, std::numeric_limits<double>::infinity())) {
    const double th = std::atan(r);
    if (th > cuts.back()) cuts.push_back(th);
  }
  cuts.push_back(m.theta_upper());

  auto integrand = [&q](double theta) {
    const double v = q(std::tan(theta));
    return std::isnan(v) ? 0.0 : std::max(v, 0.0);
  };
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    if (cuts[k + 1] <= cuts[k]) continue;
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, cuts[k], cuts[k + 1], 20, 1e-12);
  }
  return m.normalizer() * total;
}

bool PositivePartDiverges(const Polynomial& q, const HeavyTailMeasure& m) {
  if (q.is_constant()) return false;
  if (q.tail(+1).is_plus_infinity()) return true;
  return m.support().kind() == ActionSet::Kind::kFullLine &&
         q.tail(-1).is_plus_infinity();
}

}  // namespace

ExtendedValue ClassifyPolynomialIntegral(const Polynomial& q,
                                         const HeavyTailMeasure& measure,
                                         Part part) {
  if (part == Part::kNegative) {
    return -ClassifyPolynomialIntegral(-q, measure, Part::kPositive);
  }
  if (PositivePartDiverges(q, measure)) return ExtendedValue::PlusInfinity();
  return ExtendedValue::Finite(PositivePartIntegral(q, measure));
}

ExtendedValue ClassifyTailIntegral(const Polynomial& phi, double shift,
                                   const HeavyTailMeasure& measure, Part part) {
  return ClassifyPolynomialIntegral(phi.compose_affine(-1.0, shift), measure,
                                    part);
}

}  // namespace zsg
