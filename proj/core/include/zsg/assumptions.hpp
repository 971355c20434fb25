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

#ifndef ZSG_ASSUMPTIONS_HPP_
#define ZSG_ASSUMPTIONS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zsg/envelopes.hpp"
#include "zsg/game.hpp"
#include "zsg/measure.hpp"

namespace zsg {

// phi = phi1 + phi2 with phi1 strictly increasing and |phi2| <= bound.
// phi1 is the running maximum of phi plus epsilon * atan(s); the running
// maximum is exact because it only changes value at local maxima of phi.
class Decomposition {
 public:
  Decomposition(Polynomial phi, std::vector<double> local_maxima,
                double backtrack_depth, double epsilon);

  const Polynomial& phi() const { return phi_; }
  double epsilon() const { return epsilon_; }
  // sup over s of (running max - phi): how far phi falls back below its
  // own record.
  double backtrack_depth() const { return backtrack_depth_; }
  double bound() const;  // backtrack_depth + epsilon * pi / 2
  std::span<const double> local_maxima() const { return local_maxima_; }

  double running_max(double s) const;
  double increasing_part(double s) const;  // phi1
  double bounded_part(double s) const;     // phi2 = phi - phi1

 private:
  Polynomial phi_;
  std::vector<double> local_maxima_;  // ascending
  double backtrack_depth_;
  double epsilon_;
};

// Succeeds iff phi -> -inf at -inf and phi -> +inf at +inf (odd degree with
// positive leading coefficient, affine increasing included).
std::optional<Decomposition> DecomposeMonotonePlusBounded(
    const Polynomial& phi, double epsilon = 1e-6);

enum class AssumptionSide {
  kMa,  // -L + gamma * csharp(a) <= c^+(a, b0) for all a
  kMb,  // c^-(a0, b) <= gamma * cflat(b) + L for all b
};

struct AssumptionWitness {
  AssumptionSide side = AssumptionSide::kMb;
  double gamma = 0.5;
  double L = 1.0;
  double anchor = 0.0;  // b0 for kMa, a0 for kMb
  // The inequality was checked on a sample grid of the anchor's opponent set
  // clipped to [-verified_radius, verified_radius]; beyond it a leading-term
  // comparison certifies it when `asymptotic_proof` is set.
  double verified_radius = 0.0;
  bool asymptotic_proof = false;
  std::string construction;
};

enum class Verdict { kProved, kDisproved, kUnknown };

const char* VerdictName(Verdict v);

struct AssumptionCheck {
  Verdict verdict = Verdict::kUnknown;
  std::optional<AssumptionWitness> witness;
  std::optional<double> counterexample;  // action where the inequality fails
  std::string detail;
};

// Inequality slack at one opponent action: >= 0 means the inequality holds.
// kMb: gamma * cflat(b) + L - c^-(a0, b); kMa: c^+(a, b0) + L - gamma *
// csharp(a). -inf when the envelope is infinite the wrong way.
double WitnessSlack(const Game& game, const AssumptionWitness& witness,
                    double action);

struct WitnessVerification {
  bool holds = false;
  double radius = 0.0;
  bool asymptotic_proof = false;
  std::optional<double> counterexample;
};

// Samples `points` actions of the opponent set within `radius` (0 picks the
// certificate radius) and runs the leading-term comparison beyond it.
WitnessVerification VerifyWitness(const Game& game,
                                  const AssumptionWitness& witness,
                                  double radius = 0.0,
                                  std::size_t points = 2001);

AssumptionCheck CheckMb(const Game& game);
// CheckMb of the swapped game, relabeled.
AssumptionCheck CheckMa(const Game& game);

// Upper bound on the double integral of c^+ under mu_a against every
// opponent strategy: (csharp(mu_a) + L - min{0, cflat(b0)}) / gamma.
// nullopt when csharp(mu_a) is infinite (no certificate).
std::optional<double> CertifySafeA(const Game& game,
                                   const FiniteSupportMeasure& mu_a,
                                   const AssumptionWitness& witness);
// Lower bound on the double integral of c^- under mu_b against every
// opponent strategy: (cflat(mu_b) - L - max{0, csharp(a0)}) / gamma.
std::optional<double> CertifySafeB(const Game& game,
                                   const FiniteSupportMeasure& mu_b,
                                   const AssumptionWitness& witness);

// A pair s_star < 0 < s_upper with phi(s_star) > phi(s_upper): no pure
// saddle point exists for the difference-form game on half-lines.
struct PureObstruction {
  double s_star = 0.0;
  double s_upper = 0.0;
  double gap = 0.0;
};

std::optional<PureObstruction> FindPureObstruction(const Polynomial& phi);

struct PureValueGap {
  Extremum lower;  // sup_b cflat(delta_b), argpoint is b
  Extremum upper;  // inf_a csharp(delta_a), argpoint is a
  std::optional<std::pair<double, double>> saddle;  // (a, b)
};

PureValueGap ComputePureValueGap(const Game& game);

// sup over b of cflat(delta_b), exact for every supported form.
Extremum LowerPureValue(const Game& game);

}  // namespace zsg

#endif  // ZSG_ASSUMPTIONS_HPP_
