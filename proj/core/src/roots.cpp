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

#include <algorithm>
#include <cmath>

namespace zsg {
namespace {

double Bisect(const Polynomial& p, double lo, double hi, double flo,
              double tolerance) {
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= tolerance * std::max(1.0, std::abs(mid)) || mid == lo ||
        mid == hi) {
      return mid;
    }
    const double fmid = p(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> RootsOnFiniteRange(const Polynomial& p, double lo,
                                       double hi, double tolerance) {
  std::vector<double> out;
  if (p.is_constant() || !(lo <= hi)) return out;
  if (p.degree() == 1) {
    const double r = -p.coefficient(0) / p.coefficient(1);
    if (r >= lo && r <= hi) out.push_back(r);
    return out;
  }
  std::vector<double> splits{lo};
  for (double c : RootsOnFiniteRange(p.derivative(), lo, hi, tolerance)) {
    if (c > splits.back()) splits.push_back(c);
  }
  if (hi > splits.back()) splits.push_back(hi);

  for (std::size_t k = 0; k < splits.size(); ++k) {
    const double x0 = splits[k];
    const double f0 = p(x0);
    if (f0 == 0.0) {
      if (out.empty() || out.back() != x0) out.push_back(x0);
      continue;
    }
    if (k + 1 == splits.size()) break;
    const double x1 = splits[k + 1];
    const double f1 = p(x1);
    if (f1 != 0.0 && (f0 < 0) != (f1 < 0)) {
      out.push_back(Bisect(p, x0, x1, f0, tolerance));
    }
  }
  return out;
}

}  // namespace

std::vector<double> RealRoots(const Polynomial& p, double lower, double upper,
                              double tolerance) {
  if (p.is_constant()) return {};
  const double radius = p.cauchy_radius() + 1.0;
  const double lo = std::max(lower, -radius);
  const double hi = std::min(upper, radius);
  return RootsOnFiniteRange(p, lo, hi, tolerance);
}

}  // namespace zsg
