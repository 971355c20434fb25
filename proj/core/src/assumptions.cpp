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

#include "zsg/assumptions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "flat_model.hpp"
#include "zsg/error.hpp"
#include "zsg/roots.hpp"

namespace zsg {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlackTolerance = 1e-9;

struct Slack {
  double value;
  double scale;
};

// Mb slack at b for anchor a0; Ma is handled through the swapped game.
Slack MbSlack(const Game& game, const AssumptionWitness& w, double b) {
  const Extremum flat = CFlatAt(game, b);
  if (!flat.value.is_finite()) {
    return {flat.value.is_minus_infinity() ? -kInf : kInf, 1.0};
  }
  const double lhs = std::min(game.payoff_unchecked(w.anchor, b), 0.0);
  const double rhs = w.gamma * flat.value.value() + w.L;
  return {rhs - lhs, 1.0 + std::abs(lhs) + std::abs(rhs)};
}

bool SlackOk(const Slack& s) {
  return s.value >= -kSlackTolerance * s.scale;
}

AssumptionWitness AsMb(AssumptionWitness w) {
  w.side = AssumptionSide::kMb;
  return w;
}

// Radius beyond which direction * b >= radius provably satisfies Mb, or
// nullopt when the leading terms do not settle it.
std::optional<double> AsymptoticRadius(const Game& game,
                                       const AssumptionWitness& w,
                                       int direction) {
  const detail::FlatAsymptote model = detail::FlatTailModel(game, direction);
  if (model.minus_infinity || model.pieces.empty()) return std::nullopt;
  const Polynomial& best = detail::EventualMin(model.pieces, direction);
  const Polynomial q = SliceInB(game, w.anchor);
  const Polynomial lhs =
      detail::EventualSign(q, direction) < 0 ? q : Polynomial::Constant(0.0);
  const Polynomial gap = lhs - w.gamma * best - Polynomial::Constant(w.L);
  if (detail::EventualSign(gap, direction) >= 0) return std::nullopt;
  return std::max({model.radius, q.cauchy_radius(), gap.cauchy_radius(),
                   detail::SeparationRadius(model.pieces, best)});
}

WitnessVerification VerifyMb(const Game& game, const AssumptionWitness& w,
                             double radius, std::size_t points) {
  WitnessVerification out;
  const ActionSet& set_b = game.action_b();
  if (game.is_matrix()) {
    out.asymptotic_proof = true;
    out.radius = static_cast<double>(set_b.count() - 1);
    for (std::size_t j = 0; j < set_b.count(); ++j) {
      const double b = static_cast<double>(j);
      if (!SlackOk(MbSlack(game, w, b))) {
        out.counterexample = b;
        return out;
      }
    }
    out.holds = true;
    return out;
  }

  bool proof = true;
  double r_plus = 0.0;
  double r_minus = 0.0;
  if (!set_b.bounded_above()) {
    const auto r = AsymptoticRadius(game, w, +1);
    proof = proof && r.has_value();
    r_plus = r.value_or(0.0);
  }
  if (!set_b.bounded_below()) {
    const auto r = AsymptoticRadius(game, w, -1);
    proof = proof && r.has_value();
    r_minus = r.value_or(0.0);
  }

  double r = radius;
  if (r <= 0.0) {
    r = std::max({1.0, r_plus, r_minus});
    if (set_b.bounded_below()) r = std::max(r, std::abs(set_b.lower()));
    if (set_b.bounded_above()) r = std::max(r, std::abs(set_b.upper()));
  }
  double lo = std::max(set_b.lower(), -r);
  double hi = std::min(set_b.upper(), r);
  if (lo > hi) {
    lo = set_b.lower();
    hi = set_b.bounded_above() ? set_b.upper() : lo + r;
  }
  const std::size_t n = std::max<std::size_t>(points, 2);
  for (std::size_t k = 0; k < n; ++k) {
    const double b = k + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(k) /
                                                static_cast<double>(n - 1);
    if (!SlackOk(MbSlack(game, w, b))) {
      out.counterexample = b;
      out.radius = r;
      return out;
    }
  }
  out.holds = true;
  out.radius = std::max(std::abs(lo), std::abs(hi));
  out.asymptotic_proof = proof;
  return out;
}

std::optional<AssumptionWitness> TryWitness(const Game& game,
                                            AssumptionWitness w) {
  const WitnessVerification v = VerifyMb(game, w, 0.0, 2001);
  if (!v.holds || !v.asymptotic_proof) return std::nullopt;
  w.verified_radius = v.radius;
  w.asymptotic_proof = true;
  return w;
}

std::vector<double> FallbackAnchors(const Game& game) {
  const ActionSet& a = game.action_a();
  std::vector<double> raw;
  if (a.bounded_below()) raw.push_back(a.lower());
  if (a.bounded_above()) raw.push_back(a.upper());
  raw.push_back(a.clamp(0.0));
  if (const auto* d = std::get_if<DifferenceForm>(&game.payoff())) {
    if (!d->phi.is_constant()) {
      for (double r : RealRoots(d->phi.derivative(), -kInf, kInf)) {
        raw.push_back(a.clamp(r));
      }
    }
  }
  std::vector<double> out;
  for (double x : raw) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

}  // namespace

Decomposition::Decomposition(Polynomial phi, std::vector<double> local_maxima,
                             double backtrack_depth, double epsilon)
    : phi_(std::move(phi)),
      local_maxima_(std::move(local_maxima)),
      backtrack_depth_(backtrack_depth),
      epsilon_(epsilon) {}

double Decomposition::bound() const {
  return backtrack_depth_ + epsilon_ * std::numbers::pi / 2.0;
}

double Decomposition::running_max(double s) const {
  double m = phi_(s);
  for (double x : local_maxima_) {
    if (x > s) break;
    m = std::max(m, phi_(x));
  }
  return m;
}

double Decomposition::increasing_part(double s) const {
  return running_max(s) + epsilon_ * std::atan(s);
}

double Decomposition::bounded_part(double s) const {
  return phi_(s) - increasing_part(s);
}

std::optional<Decomposition> DecomposeMonotonePlusBounded(const Polynomial& phi,
                                                          double epsilon) {
  if (phi.is_constant() || phi.degree() % 2 == 0 || phi.leading() <= 0) {
    return std::nullopt;
  }
  const Polynomial dphi = phi.derivative();
  const std::vector<double> crit = RealRoots(dphi, -kInf, kInf);
  // Sign of phi' just left and right of each critical point.
  auto probe = [&](std::size_t k, int side) {
    double x;
    if (side < 0) {
      x = k == 0 ? crit[k] - 1.0 : 0.5 * (crit[k - 1] + crit[k]);
    } else {
      x = k + 1 == crit.size() ? crit[k] + 1.0 : 0.5 * (crit[k] + crit[k + 1]);
    }
    return dphi(x);
  };
  std::vector<double> maxima;
  std::vector<double> minima;
  for (std::size_t k = 0; k < crit.size(); ++k) {
    const double left = probe(k, -1);
    const double right = probe(k, +1);
    if (left > 0 && right < 0) maxima.push_back(crit[k]);
    if (left < 0 && right > 0) minima.push_back(crit[k]);
  }
  Decomposition d(phi, maxima, 0.0, epsilon);
  double depth = 0.0;
  for (double t : minima) depth = std::max(depth, d.running_max(t) - phi(t));
  return Decomposition(phi, std::move(maxima), depth, epsilon);
}

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kProved:
      return "proved";
    case Verdict::kDisproved:
      return "disproved";
    case Verdict::kUnknown:
      return "unknown";
  }
  return "unknown";
}

double WitnessSlack(const Game& game, const AssumptionWitness& witness,
                    double action) {
  if (witness.side == AssumptionSide::kMa) {
    return MbSlack(SwapPlayers(game), AsMb(witness), action).value;
  }
  return MbSlack(game, witness, action).value;
}

WitnessVerification VerifyWitness(const Game& game,
                                  const AssumptionWitness& witness,
                                  double radius, std::size_t points) {
  if (witness.side == AssumptionSide::kMa) {
    return VerifyMb(SwapPlayers(game), AsMb(witness), radius, points);
  }
  return VerifyMb(game, witness, radius, points);
}

AssumptionCheck CheckMb(const Game& game) {
  AssumptionCheck out;
  const ActionSet& set_b = game.action_b();

  // cflat = -inf anywhere rules out every witness.
  std::vector<double> probes{set_b.clamp(0.0)};
  if (set_b.bounded_below()) probes.push_back(set_b.lower());
  if (set_b.bounded_above()) probes.push_back(set_b.upper());
  for (double b : probes) {
    if (CFlatAt(game, b).value.is_minus_infinity()) {
      out.verdict = Verdict::kDisproved;
      out.counterexample = b;
      out.detail = "inf over a of c(a, b) is -inf";
      return out;
    }
  }

  auto proved = [&](AssumptionWitness w) {
    out.verdict = Verdict::kProved;
    out.detail = w.construction;
    out.witness = std::move(w);
    return out;
  };

  if (const auto* m = std::get_if<MatrixForm>(&game.payoff())) {
    AssumptionWitness w;
    w.L = 1.0 + std::max(0.0, -0.5 * m->entries.min_entry());
    w.construction = "finite game: constant shift";
    if (auto ok = TryWitness(game, w)) return proved(*ok);
  }
  if (std::holds_alternative<QuadraticDifference>(game.payoff())) {
    AssumptionWitness w;
    w.anchor = game.action_a().clamp(0.0);
    w.construction = "quadratic: anchor at the smallest |a|";
    if (auto ok = TryWitness(game, w)) return proved(*ok);
  }
  if (const auto* d = std::get_if<DifferenceForm>(&game.payoff())) {
    const auto dec = DecomposeMonotonePlusBounded(d->phi);
    if (dec && game.action_a().bounded_below()) {
      for (double factor : {0.5, 1.0}) {
        AssumptionWitness w;
        w.anchor = game.action_a().lower();
        w.L = factor * dec->bound();
        w.construction = factor < 1.0
                             ? "monotone plus bounded: L = bound / 2"
                             : "monotone plus bounded: L = bound";
        if (auto ok = TryWitness(game, w)) return proved(*ok);
      }
    }
  }

  for (double anchor : FallbackAnchors(game)) {
    for (double L = 1.0; L <= 1024.0; L *= 2.0) {
      AssumptionWitness w;
      w.anchor = anchor;
      w.L = L;
      w.construction = "grid search";
      if (auto ok = TryWitness(game, w)) return proved(*ok);
    }
  }
  out.detail = "no witness found";
  return out;
}

AssumptionCheck CheckMa(const Game& game) {
  AssumptionCheck out = CheckMb(SwapPlayers(game));
  if (out.witness) out.witness->side = AssumptionSide::kMa;
  return out;
}

std::optional<double> CertifySafeA(const Game& game,
                                   const FiniteSupportMeasure& mu_a,
                                   const AssumptionWitness& witness) {
  if (witness.side != AssumptionSide::kMa) {
    throw DomainError("certify_safe_A needs an Ma witness");
  }
  const Extremum sharp = CSharp(game, mu_a);
  const Extremum flat_b0 = CFlatAt(game, witness.anchor);
  if (!sharp.value.is_finite() || !flat_b0.value.is_finite()) return std::nullopt;
  return (sharp.value.value() + witness.L -
          std::min(0.0, flat_b0.value.value())) /
         witness.gamma;
}

std::optional<double> CertifySafeB(const Game& game,
                                   const FiniteSupportMeasure& mu_b,
                                   const AssumptionWitness& witness) {
  if (witness.side != AssumptionSide::kMb) {
    throw DomainError("certify_safe_B needs an Mb witness");
  }
  const Extremum flat = CFlat(game, mu_b);
  const Extremum sharp_a0 = CSharpAt(game, witness.anchor);
  if (!flat.value.is_finite() || !sharp_a0.value.is_finite()) return std::nullopt;
  return (flat.value.value() - witness.L -
          std::max(0.0, sharp_a0.value.value())) /
         witness.gamma;
}

}  // namespace zsg
