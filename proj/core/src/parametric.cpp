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

#include "zsg/parametric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "zsg/error.hpp"
#include "zsg/parallel.hpp"

namespace zsg {
namespace {

constexpr double kSineResolution = 1e-4;

std::string Shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double Interpolate(const std::vector<double>& values, double start,
                   double step, double x) {
  const double pos = (x - start) / step;
  if (pos <= 0) return values.front();
  const auto last = static_cast<double>(values.size() - 1);
  if (pos >= last) return values.back();
  const auto k = static_cast<std::size_t>(pos);
  const double t = pos - static_cast<double>(k);
  return values[k] + t * (values[k + 1] - values[k]);
}

double FinitePart(double v) { return std::isfinite(v) ? v : 0.0; }

}  // namespace

ParameterFunction ParameterFunction::FromPolynomial(Polynomial p) {
  ParameterFunction f;
  f.kind_ = Kind::kPolynomial;
  f.poly_ = std::move(p);
  return f;
}

ParameterFunction ParameterFunction::Sine() {
  static const std::shared_ptr<const Table> table = [] {
    auto t = std::make_shared<Table>();
    const double period = 2.0 * std::numbers::pi;
    const auto n = static_cast<std::size_t>(std::ceil(period / kSineResolution));
    t->start = 0.0;
    t->step = period / static_cast<double>(n);
    t->values.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      t->values[k] = std::sin(static_cast<double>(k) * t->step);
    }
    t->periodic = true;
    return t;
  }();
  ParameterFunction f;
  f.kind_ = Kind::kSine;
  f.table_ = table;
  return f;
}

ParameterFunction ParameterFunction::Step(double at, double height) {
  if (!std::isfinite(at) || !std::isfinite(height)) {
    throw DomainError("step parameters must be finite");
  }
  ParameterFunction f;
  f.kind_ = Kind::kStep;
  f.step_at_ = at;
  f.step_height_ = height;
  return f;
}

ParameterFunction ParameterFunction::Tabulated(double start, double step,
                                               std::vector<double> values) {
  if (values.empty() || !(step > 0) || !std::isfinite(start)) {
    throw DomainError("table needs a start, a positive step and values");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError("table values must be finite");
  }
  auto t = std::make_shared<Table>();
  t->start = start;
  t->step = step;
  t->values = std::move(values);
  ParameterFunction f;
  f.kind_ = Kind::kTable;
  f.table_ = std::move(t);
  return f;
}

double ParameterFunction::operator()(double x) const {
  switch (kind_) {
    case Kind::kPolynomial:
      return poly_(x);
    case Kind::kStep:
      return x >= step_at_ ? step_height_ : 0.0;
    case Kind::kSine: {
      const double period = 2.0 * std::numbers::pi;
      double r = std::fmod(x, period);
      if (r < 0) r += period;
      return Interpolate(table_->values, 0.0, table_->step, r);
    }
    case Kind::kTable:
      return Interpolate(table_->values, table_->start, table_->step, x);
  }
  return 0.0;
}

std::string ParameterFunction::to_string() const {
  switch (kind_) {
    case Kind::kPolynomial: {
      std::string s;
      for (double c : poly_.coefficients()) {
        if (!s.empty()) s += ',';
        s += Shortest(c);
      }
      return s;
    }
    case Kind::kSine:
      return "sin";
    case Kind::kStep:
      return "step:" + Shortest(step_at_) + ":" + Shortest(step_height_);
    case Kind::kTable: {
      std::string s = "table:" + Shortest(table_->start) + ":" +
                      Shortest(table_->step) + ":";
      for (std::size_t k = 0; k < table_->values.size(); ++k) {
        if (k) s += ',';
        s += Shortest(table_->values[k]);
      }
      return s;
    }
  }
  return "";
}

Game GameFamily::At(double x) const {
  if (const auto* f = std::get_if<ShiftedDifference>(&form)) {
    return Game(action_a, action_b,
                DifferenceForm{f->phi + Polynomial::Constant(f->psi(x))});
  }
  const auto& f = std::get<SeparableFamily>(form);
  return Game(action_a, action_b, SeparableForm{f.phi_a, f.phi_b, f.phi_x(x)});
}

SweepRecord SolveFamilyAt(const GameFamily& family, double x,
                          const SolverConfig& cfg) {
  SweepRecord rec;
  rec.x = x;
  try {
    const Game game = family.At(x);
    if (!game.validity().valid()) {
      rec.failure = "game is not valid at this x";
      return rec;
    }
    const DiagnoseReport d = Diagnose(game);
    rec.theorems = d.theorems;
    rec.pure = d.pure;
    rec.solution = SolveContinuous(game, cfg, d);
    rec.ok = true;
  } catch (const Error& e) {
    rec.failure = std::string(CategoryName(e.category())) + ": " + e.what();
  }
  return rec;
}

std::vector<SweepRecord> Sweep(const GameFamily& family,
                               const std::vector<double>& x_grid,
                               const SolverConfig& cfg, std::size_t jobs) {
  if (x_grid.empty()) throw DomainError("sweep needs a nonempty grid");
  std::vector<SweepRecord> out(x_grid.size());
  SolverConfig inner = cfg;
  inner.jobs = 1;
  ParallelFor(x_grid.size(), jobs, [&](std::size_t i) {
    out[i] = SolveFamilyAt(family, x_grid[i], inner);
  });
  return out;
}

std::vector<double> LinearGrid(double start, double stop, std::size_t count) {
  if (count == 0 || !std::isfinite(start) || !std::isfinite(stop)) {
    throw DomainError("grid needs finite ends and a positive count");
  }
  if (count == 1) return {start};
  std::vector<double> g(count);
  for (std::size_t k = 0; k < count; ++k) {
    g[k] = start + (stop - start) * static_cast<double>(k) /
                       static_cast<double>(count - 1);
  }
  g.back() = stop;
  return g;
}

ContinuityReport MakeContinuityReport(const std::vector<SweepRecord>& records,
                                      double lipschitz) {
  ContinuityReport r;
  r.lipschitz = lipschitz;
  for (const SweepRecord& rec : records) {
    if (rec.ok) r.max_gap = std::max(r.max_gap, rec.solution.certified_gap());
  }
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    const SweepRecord& p = records[i];
    const SweepRecord& q = records[i + 1];
    if (!p.ok || !q.ok) {
      r.jumps.push_back(std::nan(""));
      r.moduli.push_back(std::nan(""));
      continue;
    }
    const double jump =
        std::abs(q.solution.value_estimate - p.solution.value_estimate);
    const double dx = std::abs(q.x - p.x);
    r.jumps.push_back(jump);
    r.moduli.push_back(dx > 0 ? jump / dx : 0.0);
    r.max_jump = std::max(r.max_jump, jump);
    const double threshold = p.solution.certified_gap() +
                             q.solution.certified_gap() + lipschitz * dx;
    if (jump > threshold) r.flags.push_back({i, jump, threshold});
  }
  return r;
}

UscReport MakeUscReport(const std::vector<SweepRecord>& records,
                        double lipschitz) {
  UscReport r;
  r.header =
      "empirical check: one computed solution per x stands in for the full "
      "solution set, so only a necessary condition is tested";
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const SweepRecord& rec : records) {
    if (!rec.ok) continue;
    for (const auto* mu : {&rec.solution.strategy_a, &rec.solution.strategy_b}) {
      lo = std::min(lo, mu->min_point());
      hi = std::max(hi, mu->max_point());
    }
  }
  if (!(lo <= hi)) {
    lo = -1.0;
    hi = 1.0;
  }
  if (hi - lo < 1e-12) {
    lo -= 1.0;
    hi += 1.0;
  }
  for (int k = 0; k < 64; ++k) r.probes.push_back(lo + (hi - lo) * k / 63.0);

  auto deviation = [](const FiniteSupportMeasure& from,
                      const FiniteSupportMeasure& to, double eps) {
    double worst = 0.0;
    for (const Atom& t : to.atoms()) {
      double d = std::numeric_limits<double>::infinity();
      for (const Atom& f : from.atoms()) d = std::min(d, std::abs(t.point - f.point));
      worst = std::max(worst, d - eps);
    }
    return std::max(worst, 0.0);
  };
  auto cdf_distance = [&](const FiniteSupportMeasure& x,
                          const FiniteSupportMeasure& y) {
    double d = 0.0;
    for (double t : r.probes) d = std::max(d, std::abs(x.cdf(t) - y.cdf(t)));
    return d;
  };

  const ContinuityReport cont = MakeContinuityReport(records, lipschitz);
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    const SweepRecord& p = records[i];
    const SweepRecord& q = records[i + 1];
    if (!p.ok || !q.ok) continue;
    UscPair pair;
    pair.index = i;
    const double eps = std::max(FinitePart(p.solution.final_h),
                                FinitePart(q.solution.final_h));
    pair.support_deviation_a =
        deviation(p.solution.strategy_a, q.solution.strategy_a, eps);
    pair.support_deviation_b =
        deviation(p.solution.strategy_b, q.solution.strategy_b, eps);
    pair.cdf_distance_a = cdf_distance(p.solution.strategy_a, q.solution.strategy_a);
    pair.cdf_distance_b = cdf_distance(p.solution.strategy_b, q.solution.strategy_b);
    pair.support_flag = std::max(pair.support_deviation_a,
                                 pair.support_deviation_b) > eps;
    for (const ContinuityFlag& f : cont.flags) {
      if (f.index == i) pair.value_flag = true;
    }
    r.support_flags += pair.support_flag;
    r.value_flags += pair.value_flag;
    r.pairs.push_back(pair);
  }
  return r;
}

CanonicalSelection SelectCanonical(const std::vector<SweepRecord>& records) {
  CanonicalSelection out;
  for (const SweepRecord& rec : records) {
    if (!rec.ok || !rec.solution.converged) {
      out.omitted.push_back("x = " + Shortest(rec.x) + ": not converged");
      continue;
    }
    Selection s;
    s.x = rec.x;
    s.strategy_a = rec.solution.strategy_a;
    s.strategy_b = rec.solution.strategy_b;
    if (s.strategy_a.is_dirac() && s.strategy_b.is_dirac()) {
      s.pure = std::make_pair(s.strategy_a.min_point(), s.strategy_b.min_point());
    }
    out.selections.push_back(std::move(s));
  }
  return out;
}

}  // namespace zsg
