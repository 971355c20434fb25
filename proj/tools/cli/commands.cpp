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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "config.hpp"
#include "json_report.hpp"
#include "zsg/assumptions.hpp"
#include "zsg/envelopes.hpp"
#include "zsg/error.hpp"
#include "zsg/reports.hpp"

namespace zsg::cli {
namespace {

struct Context {
  const CommandOptions& opts;
  ParsedConfig config;
  std::ostream& out;
};

std::string Num(double v) { return CsvNumber(v); }
std::string Num(const ExtendedValue& v) {
  return v.is_finite() ? CsvNumber(v.value()) : v.to_string();
}

[[noreturn]] void ConfigFail(const std::string& msg) {
  throw Error(ErrorCategory::kConfig, msg);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ConfigFail("cannot read config file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const CommandOptions& opts, const std::string& name,
               const std::string& content) {
  if (opts.out_dir.empty()) return;
  std::filesystem::create_directories(opts.out_dir);
  const auto path = std::filesystem::path(opts.out_dir) / name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  if (!f) throw Error(ErrorCategory::kNumerical, "cannot write " + path.string());
}

void WriteReport(const CommandOptions& opts, const ordered_json& j) {
  WriteFile(opts, "report.json", j.dump(2) + "\n");
}

const Game& RequireGame(const Context& ctx) {
  if (!ctx.config.game) {
    ConfigFail(ctx.opts.command + " needs a [game] config; use sweep for families");
  }
  return *ctx.config.game;
}

SolverConfig Solver(const Context& ctx) {
  SolverConfig s = ctx.config.solver;
  if (ctx.opts.tol) s.tol = *ctx.opts.tol;
  s.jobs = ctx.opts.jobs;
  try {
    s.Validate();
  } catch (const DomainError& e) {
    ConfigFail(e.what());
  }
  return s;
}

int Validate(Context& ctx) {
  ordered_json j;
  bool all_valid = true;
  std::ostringstream text;
  auto report = [&](const Game& g, const std::string& label) {
    const ValidityRecord& v = g.validity();
    all_valid = all_valid && v.valid();
    text << label << (v.valid() ? "valid game" : "invalid game") << '\n';
    for (const std::string& r : v.reasons) text << "  " << r << '\n';
    return ToJson(v);
  };
  if (ctx.config.game) {
    j = report(*ctx.config.game, "");
    j["form"] = FormName(ctx.config.game->payoff());
  } else {
    ordered_json points = ordered_json::array();
    for (double x : ctx.config.x_grid) {
      ordered_json p = report(ctx.config.family->At(x), "x = " + Num(x) + ": ");
      p["x"] = x;
      points.push_back(p);
    }
    j = {{"valid", all_valid}, {"points", points}};
  }
  WriteReport(ctx.opts, j);
  ctx.out << (ctx.opts.json ? j.dump(2) + "\n" : text.str());
  return all_valid ? kExitOk : kExitInvalidGame;
}

std::vector<double> DefaultPoints(const ActionSet& set) {
  if (set.is_finite()) {
    std::vector<double> p;
    for (std::size_t k = 0; k < set.count(); ++k) p.push_back(double(k));
    return p;
  }
  double lo = -2.0;
  double hi = 2.0;
  if (set.bounded_below()) {
    lo = set.lower();
    hi = set.bounded_above() ? set.upper() : lo + 4.0;
  } else if (set.bounded_above()) {
    hi = set.upper();
    lo = hi - 4.0;
  }
  std::vector<double> p;
  for (int k = 0; k <= 8; ++k) p.push_back(lo + (hi - lo) * k / 8.0);
  return p;
}

int Envelope(Context& ctx) {
  const Game& game = RequireGame(ctx);
  std::vector<double> points;
  if (ctx.opts.points.empty()) {
    points = DefaultPoints(game.action_a());
    for (double b : DefaultPoints(game.action_b())) {
      if (std::find(points.begin(), points.end(), b) == points.end()) points.push_back(b);
    }
    std::sort(points.begin(), points.end());
  } else {
    points = ParseNumberList(ctx.opts.points);
  }
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  text << "point,csharp,cflat\n";
  for (double x : points) {
    ordered_json row{{"point", x}};
    std::string sharp = "n/a";
    std::string flat = "n/a";
    if (game.action_a().contains(x)) {
      const Extremum e = CSharpAt(game, x);
      row["csharp"] = ToJson(e);
      sharp = Num(e.value);
    } else {
      row["csharp"] = nullptr;
    }
    if (game.action_b().contains(x)) {
      const Extremum e = CFlatAt(game, x);
      row["cflat"] = ToJson(e);
      flat = Num(e.value);
    } else {
      row["cflat"] = nullptr;
    }
    text << Num(x) << ',' << sharp << ',' << flat << '\n';
    rows.push_back(row);
  }
  ordered_json j{{"envelopes", rows}};
  WriteReport(ctx.opts, j);
  ctx.out << (ctx.opts.json ? j.dump(2) + "\n" : text.str());
  return kExitOk;
}

int DiagnoseCmd(Context& ctx) {
  const Game& game = RequireGame(ctx);
  const DiagnoseReport d = Diagnose(game);
  const ordered_json j = ToJson(d);
  WriteReport(ctx.opts, j);
  if (ctx.opts.json) {
    ctx.out << j.dump(2) << '\n';
  } else {
    const TheoremFlags& t = d.theorems;
    ctx.out << "form: " << d.form << '\n'
            << "valid: " << (d.validity.valid() ? "yes" : "no") << '\n';
    for (const std::string& r : d.validity.reasons) ctx.out << "  " << r << '\n';
    ctx.out << "Ma: " << VerdictName(d.ma.verdict) << '\n'
            << "Mb: " << VerdictName(d.mb.verdict) << '\n'
            << "value exists: " << (t.value_exists ? "yes" : "no") << '\n'
            << "value and solution exist: " << (t.solution_exists ? "yes" : "no")
            << '\n'
            << "pure solution: " << PureSolutionName(d.pure) << '\n';
    for (const std::string& n : d.notes) ctx.out << "note: " << n << '\n';
  }
  return d.validity.valid() ? kExitOk : kExitInvalidGame;
}

int PureCheck(Context& ctx) {
  const Game& game = RequireGame(ctx);
  if (!game.validity().valid()) {
    throw Error(ErrorCategory::kInvalidGame, game.validity().reasons.front());
  }
  const PureValueGap gap = ComputePureValueGap(game);
  std::optional<PureObstruction> obstruction;
  if (const auto* d = std::get_if<DifferenceForm>(&game.payoff())) {
    obstruction = FindPureObstruction(d->phi);
  }
  ordered_json j = ToJson(gap);
  j["pure_solution"] = gap.saddle ? "exists" : "none";
  if (obstruction) {
    j["obstruction"] = {{"s_star", obstruction->s_star},
                        {"s_upper", obstruction->s_upper},
                        {"gap", obstruction->gap}};
  } else {
    j["obstruction"] = nullptr;
  }
  WriteReport(ctx.opts, j);
  if (ctx.opts.json) {
    ctx.out << j.dump(2) << '\n';
    return kExitOk;
  }
  ctx.out << "lower pure value: " << Num(gap.lower.value) << '\n'
          << "upper pure value: " << Num(gap.upper.value) << '\n';
  if (gap.saddle) {
    ctx.out << "pure saddle point: a = " << Num(gap.saddle->first)
            << ", b = " << Num(gap.saddle->second) << '\n';
  } else {
    ctx.out << "no pure solution\n";
  }
  if (obstruction) {
    ctx.out << "obstruction: s_star = " << Num(obstruction->s_star)
            << ", s_upper = " << Num(obstruction->s_upper)
            << ", gap = " << Num(obstruction->gap) << '\n';
  }
  return kExitOk;
}

int Solve(Context& ctx) {
  const Game& game = RequireGame(ctx);
  if (!game.validity().valid()) {
    throw Error(ErrorCategory::kInvalidGame, game.validity().reasons.front());
  }
  const SolverConfig cfg = Solver(ctx);
  const DiagnoseReport d = Diagnose(game);
  const GameSolution s = SolveContinuous(game, cfg, d);
  const ordered_json j = ToJson(s);
  WriteReport(ctx.opts, j);
  WriteFile(ctx.opts, "trace.csv", TraceCsv(s));
  if (ctx.opts.json) {
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << "value estimate: " << Num(s.value_estimate) << '\n'
            << "certified interval: [" << Num(s.certified_lower) << ", "
            << Num(s.certified_upper) << "]\n"
            << "certified gap: " << Num(s.certified_gap()) << '\n'
            << "converged: " << (s.converged ? "yes" : "no") << '\n'
            << "strategy a: " << s.strategy_a.to_string() << '\n'
            << "strategy b: " << s.strategy_b.to_string() << '\n'
            << TraceCsv(s);
    for (const std::string& n : s.notes) ctx.out << "note: " << n << '\n';
  }
  return s.converged ? kExitOk : kExitNotConverged;
}

int Certify(Context& ctx) {
  const Game& game = RequireGame(ctx);
  if (ctx.opts.strategy.empty()) ConfigFail("certify needs --strategy");
  if (!game.validity().valid()) {
    throw Error(ErrorCategory::kInvalidGame, game.validity().reasons.front());
  }
  const FiniteSupportMeasure mu = ParseStrategy(ctx.opts.strategy);
  ordered_json j{{"strategy", ToJson(mu)}};
  std::ostringstream text;

  auto side = [&](bool as_a) {
    const ActionSet& set = as_a ? game.action_a() : game.action_b();
    const char* name = as_a ? "player I" : "player II";
    ordered_json r;
    bool inside = true;
    for (const Atom& a : mu.atoms()) inside = inside && set.contains(a.point);
    if (!inside) {
      r = {{"certified", false}, {"reason", "strategy is outside the action set"}};
      text << name << ": strategy is outside the action set\n";
      return r;
    }
    const AssumptionCheck check = as_a ? CheckMa(game) : CheckMb(game);
    const Extremum env = as_a ? CSharp(game, mu) : CFlat(game, mu);
    r["envelope"] = ToJson(env.value);
    if (!check.witness) {
      r["certified"] = false;
      r["reason"] = std::string("no witness: ") + VerdictName(check.verdict);
      text << name << ": no certificate (" << VerdictName(check.verdict) << ")\n";
      return r;
    }
    const std::optional<double> bound = as_a
                                            ? CertifySafeA(game, mu, *check.witness)
                                            : CertifySafeB(game, mu, *check.witness);
    r["witness"] = ToJson(check)["witness"];
    if (!bound) {
      r["certified"] = false;
      r["reason"] = "envelope is infinite";
      text << name << ": no certificate (envelope is infinite)\n";
      return r;
    }
    r["certified"] = true;
    r["bound"] = *bound;
    text << name << (as_a ? ": safe; integral of c+ <= " : ": safe; integral of c- >= ")
         << Num(*bound) << " against every opponent strategy\n";
    return r;
  };
  j["player_a"] = side(true);
  j["player_b"] = side(false);
  WriteReport(ctx.opts, j);
  ctx.out << (ctx.opts.json ? j.dump(2) + "\n" : text.str());
  return kExitOk;
}

int SweepCmd(Context& ctx) {
  if (!ctx.config.family) ConfigFail("sweep needs a [family] config");
  const SolverConfig cfg = Solver(ctx);
  const std::vector<SweepRecord> records =
      Sweep(*ctx.config.family, ctx.config.x_grid, cfg, ctx.opts.jobs);
  ordered_json recs = ordered_json::array();
  for (const SweepRecord& r : records) recs.push_back(ToJson(r));
  ordered_json j{{"records", recs}};
  const bool enough = records.size() >= 2;
  if (enough) {
    j["continuity"] = ToJson(MakeContinuityReport(records, ctx.config.lip));
    j["usc"] = ToJson(MakeUscReport(records, ctx.config.lip));
  }
  j["selection"] = ToJson(SelectCanonical(records));
  WriteReport(ctx.opts, j);
  WriteFile(ctx.opts, "sweep.csv", SweepCsv(records));
  WriteFile(ctx.opts, "plotdata.csv", PlotDataCsv(records));
  if (ctx.opts.json) {
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << PlotDataCsv(records);
    if (enough) {
      const ContinuityReport c = MakeContinuityReport(records, ctx.config.lip);
      ctx.out << "continuity flags: " << c.flags.size() << '\n';
    }
  }
  bool invalid = false;
  bool unconverged = false;
  for (const SweepRecord& r : records) {
    if (!r.ok && r.failure.rfind("game is not valid", 0) == 0) invalid = true;
    if (!r.ok || !r.solution.converged) unconverged = true;
  }
  if (invalid) return kExitInvalidGame;
  return unconverged ? kExitNotConverged : kExitOk;
}

}  // namespace

const std::vector<std::string>& CommandNames() {
  static const std::vector<std::string> names = {
      "validate", "envelope", "diagnose", "pure-check", "solve", "certify", "sweep"};
  return names;
}

int RunCommand(const CommandOptions& options, std::ostream& out,
               std::ostream& err) {
  try {
    if (options.config_path.empty()) ConfigFail("--config is required");
    if (options.jobs < 1) ConfigFail("--jobs must be at least 1");
    Context ctx{options, ParseConfig(ReadFile(options.config_path)), out};
    const std::string& c = options.command;
    if (c == "validate") return Validate(ctx);
    if (c == "envelope") return Envelope(ctx);
    if (c == "diagnose") return DiagnoseCmd(ctx);
    if (c == "pure-check") return PureCheck(ctx);
    if (c == "solve") return Solve(ctx);
    if (c == "certify") return Certify(ctx);
    if (c == "sweep") return SweepCmd(ctx);
    ConfigFail("unknown command '" + c + "'");
  } catch (const Error& e) {
    err << "error: " << CategoryName(e.category()) << ": " << e.what() << '\n';
    switch (e.category()) {
      case ErrorCategory::kConfig:
        return kExitConfig;
      case ErrorCategory::kInvalidGame:
        return kExitInvalidGame;
      default:
        return kExitOther;
    }
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitOther;
  }
}

}  // namespace zsg::cli
