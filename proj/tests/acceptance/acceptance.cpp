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

// Acceptance checks. One line per criterion: "PASS <n> <summary>" or
// "FAIL <n> <summary>: <detail>". Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "oracles.hpp"
#include "zsg/assumptions.hpp"
#include "zsg/envelopes.hpp"
#include "zsg/expected_payoff.hpp"
#include "zsg/matrix_game.hpp"
#include "zsg/parametric.hpp"
#include "zsg/solver.hpp"

namespace {

using namespace zsg;
using Clock = std::chrono::steady_clock;

const Polynomial kCubic{0, -1, 0, 1};

Game Cubic() {
  return Game(ActionSet::HalfLine(0), ActionSet::HalfLine(0), DifferenceForm{kCubic});
}

Game Quadratic() {
  return Game(ActionSet::FullLine(), ActionSet::FullLine(), QuadraticDifference{});
}

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Collects the failed conditions of one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && detail_.empty()) detail_ = what;
    ok_ = ok_ && ok;
  }
  void Near(double got, double want, double tol, const std::string& what) {
    std::ostringstream s;
    s.precision(12);
    s << what << " = " << got << ", want " << want << " +- " << tol;
    Expect(std::abs(got - want) <= tol, s.str());
  }
  bool ok() const { return ok_; }
  const std::string& detail() const { return detail_; }

 private:
  bool ok_ = true;
  std::string detail_;
};

void PureGap(Check& c) {
  const auto start = Clock::now();
  cli::CommandOptions opts;
  opts.command = "pure-check";
  opts.config_path = std::string(ZSG_TEST_DATA_DIR) + "/cubic.cfg";
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::RunCommand(opts, out, err);
  const PureValueGap gap = ComputePureValueGap(Cubic());
  const double seconds = Seconds(start);
  c.Expect(code == 0, "pure-check exit code " + std::to_string(code));
  c.Expect(out.str().find("no pure solution") != std::string::npos,
           "pure-check did not report the missing pure solution");
  c.Expect(!gap.saddle.has_value(), "a pure saddle was reported");
  // Grid oracle: inf of phi over s >= 0 and sup over s <= 0.
  const auto lo = testing::GridMinimize(kCubic, 0, 5, 1000000);
  const auto hi = testing::GridMaximize(kCubic, -5, 0, 1000000);
  c.Near(gap.lower.value.value(), lo.value, 1e-6, "lower pure value vs grid");
  c.Near(gap.upper.value.value(), hi.value, 1e-6, "upper pure value vs grid");
  c.Near(gap.lower.value.value(), -0.3849002, 1e-6, "lower pure value");
  c.Near(gap.upper.value.value(), 0.3849002, 1e-6, "upper pure value");
  c.Expect(seconds < 1.0, "runtime " + std::to_string(seconds) + " s");
}

void SkewValue(Check& c) {
  const auto start = Clock::now();
  const GameSolution s = SolveContinuous(Cubic());
  const double seconds = Seconds(start);
  c.Expect(std::abs(s.value_estimate) <= 1e-2,
           "value estimate " + std::to_string(s.value_estimate));
  c.Expect(s.certified_gap() <= 2e-2, "certified gap " + std::to_string(s.certified_gap()));
  const auto grid = TruncatedGrid(ActionSet::HalfLine(0), SolverConfig{}.R0, SolverConfig{}.h0);
  const Matrix m = TabulateMatrix(Cubic(), grid, grid);
  double skew = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) skew = std::max(skew, std::abs(m(i, j) + m(j, i)));
  c.Expect(skew <= 1e-12, "shared-grid matrix is not skew-symmetric");
  c.Expect(seconds < 60, "runtime " + std::to_string(seconds) + " s");
}

void QuadraticSaddle(Check& c) {
  SolverConfig cfg;
  cfg.tol = 1e-9;
  const GameSolution s = SolveContinuous(Quadratic(), cfg);
  c.Near(s.value_estimate, 0, 1e-9, "value");
  const auto d0 = FiniteSupportMeasure::Dirac(0);
  c.Expect(CheckSaddle(Quadratic(), d0, d0, 1e-9).holds, "(delta_0, delta_0) is not a saddle");
  for (double a : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    c.Near(CSharpAt(Quadratic(), a).value.value(), a * a, 1e-12, "csharp(" + std::to_string(a) + ")");
  }
}

// Brute force over mixtures on a simplex grid of about 10^4 points.
double MixtureGridValue(const Matrix& m) {
  auto guarantee = [&](const std::vector<double>& p) {
    double worst = -INFINITY;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < m.rows(); ++i) s += p[i] * m(i, j);
      worst = std::max(worst, s);
    }
    return worst;
  };
  double best = INFINITY;
  if (m.rows() == 2) {
    for (int k = 0; k <= 10000; ++k) best = std::min(best, guarantee({k / 1e4, 1 - k / 1e4}));
  } else {
    const int n = 141;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j)
        best = std::min(best, guarantee({i / double(n), j / double(n), (n - i - j) / double(n)}));
  }
  return best;
}

void MatrixLp(Check& c) {
  const Matrix small = Matrix::FromRows({{2, -1}, {-1, 1}});
  const MatrixGameResult r = SolveMatrixGame(small);
  c.Near(r.value, 0.2, 1e-9, "2x2 value");
  c.Near(r.row_strategy[0], 0.4, 1e-8, "2x2 row p0");
  c.Near(r.row_strategy[1], 0.6, 1e-8, "2x2 row p1");
  c.Near(r.col_strategy[0], 0.4, 1e-8, "2x2 col q0");
  c.Near(r.col_strategy[1], 0.6, 1e-8, "2x2 col q1");
  c.Near(MixtureGridValue(small), r.value, 1e-3, "2x2 mixture grid");

  const Matrix rps = Matrix::FromRows({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
  const MatrixGameResult q = SolveMatrixGame(rps);
  c.Near(q.value, 0, 1e-12, "rps value");
  for (std::size_t i = 0; i < 3; ++i) {
    c.Near(q.row_strategy[i], 1.0 / 3, 1e-12, "rps row");
    c.Near(q.col_strategy[i], 1.0 / 3, 1e-12, "rps col");
  }
  c.Near(MixtureGridValue(rps), q.value, 1e-3, "rps mixture grid");
}

void Assumptions(Check& c) {
  const AssumptionCheck mb = CheckMb(Cubic());
  c.Expect(mb.verdict == Verdict::kProved && mb.witness, "no Mb witness");
  if (!mb.witness) return;
  const AssumptionWitness& w = *mb.witness;
  c.Near(w.gamma, 0.5, 0, "gamma");
  c.Expect(w.L <= 0.6, "L = " + std::to_string(w.L));
  c.Near(w.anchor, 0, 0, "anchor");
  // Fresh grid of radius 20 with an independent flat envelope:
  // cflat(b) = inf over s >= -b of phi(s), and phi increases beyond 1.
  for (int k = 0; k < 10000; ++k) {
    const double b = 20.0 * k / 9999;
    const double flat = testing::GridMinimize(kCubic, -b, std::max(1.0, -b), 2001).value;
    const double lhs = std::min(kCubic(w.anchor - b), 0.0);
    if (lhs > w.gamma * flat + w.L + 1e-9) {
      c.Expect(false, "inequality fails at b = " + std::to_string(b));
      break;
    }
  }
  const auto d = DecomposeMonotonePlusBounded(kCubic);
  c.Expect(d.has_value(), "no decomposition");
  if (d) c.Near(d->bound(), 4 / (3 * std::sqrt(3.0)) + 1e-6 * M_PI / 2, 1e-6, "bound B");
}

void Divergence(Check& c) {
  const Game square(ActionSet::HalfLine(0), ActionSet::HalfLine(0),
                    DifferenceForm{Polynomial{0, 0, 1}});
  const ExtendedValue v = ExpectedPayoff(square, FiniteSupportMeasure::Dirac(0),
                                         HeavyTailMeasure(ActionSet::HalfLine(0)));
  c.Expect(v.is_plus_infinity(), "square case gave " + v.to_string());
  const Game cube(ActionSet::FullLine(), ActionSet::FullLine(),
                  DifferenceForm{Polynomial{0, 0, 0, 1}});
  const HeavyTailMeasure line(ActionSet::FullLine());
  const ExtendedValue u = ExpectedPayoff(cube, line, line);
  c.Expect(u.is_undefined(), "two-sided cubic gave " + u.to_string());
}

std::vector<double> Weights(const FiniteSupportMeasure& mu) {
  std::vector<double> w;
  for (const Atom& x : mu.atoms()) w.push_back(x.weight);
  return w;
}

void SafeCertificates(Check& c) {
  const Game g = Cubic();
  const AssumptionCheck ma = CheckMa(g);
  c.Expect(ma.witness.has_value(), "no Ma witness");
  if (!ma.witness) return;
  std::mt19937 rng(20261015);
  int certified = 0;
  while (certified < 100) {
    const auto mu_a = testing::RandomMeasure(rng, 0, 5);
    if (!CSharp(g, mu_a).value.is_finite()) continue;
    const auto bound = CertifySafeA(g, mu_a, *ma.witness);
    c.Expect(bound.has_value(), "no certificate for a finite envelope");
    if (!bound) return;
    ++certified;
    for (int k = 0; k < 100; ++k) {
      const auto mu_b = testing::RandomMeasure(rng, 0, 10, 6);
      // Monte-Carlo estimate of the double integral of c^+.
      const std::vector<double> wa = Weights(mu_a);
      const std::vector<double> wb = Weights(mu_b);
      std::discrete_distribution<std::size_t> pick_a(wa.begin(), wa.end());
      std::discrete_distribution<std::size_t> pick_b(wb.begin(), wb.end());
      double sum = 0.0;
      const int samples = 200;
      for (int s = 0; s < samples; ++s) {
        const double a = mu_a.atoms()[pick_a(rng)].point;
        const double b = mu_b.atoms()[pick_b(rng)].point;
        sum += std::max(g.payoff_unchecked(a, b), 0.0);
      }
      if (sum / samples > *bound) {
        c.Expect(false, "estimate " + std::to_string(sum / samples) + " above bound " +
                            std::to_string(*bound));
        return;
      }
    }
  }
}

void ParametricSweep(Check& c) {
  const auto start = Clock::now();
  const auto grid = LinearGrid(-M_PI, M_PI, 33);
  const GameFamily sine{ActionSet::HalfLine(0), ActionSet::HalfLine(0),
                        ShiftedDifference{ParameterFunction::Sine(), kCubic}};
  const auto records = zsg::Sweep(sine, grid, {});
  double max_err = 0.0;
  double max_gap = 0.0;
  for (const SweepRecord& r : records) {
    c.Expect(r.ok, "record failed at x = " + std::to_string(r.x));
    if (!r.ok) return;
    max_err = std::max(max_err, std::abs(r.solution.value_estimate - std::sin(r.x)));
    max_gap = std::max(max_gap, r.solution.certified_gap());
  }
  c.Expect(max_err <= 2 * max_gap, "max error " + std::to_string(max_err) +
                                       " above twice the max gap " + std::to_string(max_gap));
  c.Expect(2 * max_gap <= 5e-2, "max gap " + std::to_string(max_gap));
  c.Expect(MakeContinuityReport(records).flags.empty(), "sine sweep raised continuity flags");
  const GameFamily step{ActionSet::HalfLine(0), ActionSet::HalfLine(0),
                        ShiftedDifference{ParameterFunction::Step(0, 5), kCubic}};
  const ContinuityReport s = MakeContinuityReport(zsg::Sweep(step, grid, {}));
  bool at_step = false;
  for (const ContinuityFlag& f : s.flags) at_step = at_step || (grid[f.index] < 0 && grid[f.index + 1] >= 0);
  c.Expect(at_step, "step family raised no flag at the step");
  const double seconds = Seconds(start);
  c.Expect(seconds < 300, "runtime " + std::to_string(seconds) + " s");
}

void Invariants(Check& c) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> unit(0, 1);
  for (const Game& g : {Cubic(), Quadratic()}) {
    for (int k = 0; k < 1000; ++k) {
      const auto m1 = testing::RandomMeasure(rng, 0, 4);
      const auto m2 = testing::RandomMeasure(rng, 0, 4);
      const double s1 = CSharp(g, m1).value.value();
      const double s2 = CSharp(g, m2).value.value();
      const double f1 = CFlat(g, m1).value.value();
      const double f2 = CFlat(g, m2).value.value();
      if (f2 > s1) {
        c.Expect(false, "sandwich fails");
        return;
      }
      const double t = unit(rng);
      const auto mix = FiniteSupportMeasure::Mixture(t, m1, m2);
      if (CSharp(g, mix).value.value() > t * s1 + (1 - t) * s2 + 1e-9 ||
          CFlat(g, mix).value.value() < t * f1 + (1 - t) * f2 - 1e-9) {
        c.Expect(false, "convexity or concavity fails");
        return;
      }
    }
    for (int k = 0; k < 100; ++k) {
      const double a = 3 * unit(rng);
      const double lo = g.action_b().bounded_below() ? g.action_b().lower() : -5;
      const double sup_plus = testing::GridMaximize(
          [&](double b) { return std::max(g.payoff_unchecked(a, b), 0.0); }, lo, a + 5, 20001).value;
      const double sharp = CSharpAt(g, a).value.value();
      if (std::abs(sup_plus - std::max(sharp, 0.0)) > 1e-9) {
        c.Expect(false, "positive-part supremum identity fails at a = " + std::to_string(a));
        return;
      }
    }
  }
  const double tol = 1e-9;
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_real_distribution<double> entry(-10, 10);
  for (int k = 0; k < 50; ++k) {
    Matrix m(size(rng), size(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    const double v = SolveMatrixGame(m, tol).value;
    const double w = SolveMatrixGame(m.negated_transpose(), tol).value;
    if (std::abs(v + w) > 2 * tol) {
      c.Expect(false, "swap antisymmetry fails by " + std::to_string(std::abs(v + w)));
      return;
    }
  }
}

struct Criterion {
  const char* summary;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"pure value gap of the cubic game", PureGap},
      {"mixed value of the skew-symmetric game", SkewValue},
      {"quadratic game value, saddle and envelope", QuadraticSaddle},
      {"matrix game LP", MatrixLp},
      {"Mb witness and decomposition bound", Assumptions},
      {"divergence classification", Divergence},
      {"safe-strategy certificates", SafeCertificates},
      {"parametric sweep", ParametricSweep},
      {"invariant suites", Invariants},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].run(c);
    } catch (const std::exception& e) {
      c.Expect(false, std::string("exception: ") + e.what());
    }
    if (c.ok()) {
      std::printf("PASS %zu %s\n", i + 1, criteria[i].summary);
    } else {
      ++failed;
      std::printf("FAIL %zu %s: %s\n", i + 1, criteria[i].summary, c.detail().c_str());
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
