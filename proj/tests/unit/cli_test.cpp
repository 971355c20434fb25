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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "commands.hpp"
#include "config.hpp"
#include "json.hpp"
#include "zsg/error.hpp"

namespace zsg::cli {
namespace {

namespace fs = std::filesystem;

std::string Data(const std::string& name) {
  return std::string(ZSG_TEST_DATA_DIR) + "/" + name;
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(CommandOptions opts) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCommand(opts, out, err);
  return {code, out.str(), err.str()};
}

Outcome Invoke(const std::string& command, const std::string& config) {
  CommandOptions opts;
  opts.command = command;
  opts.config_path = Data(config);
  return Invoke(opts);
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path ScratchDir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("zsg_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

int ConfigErrorLine(const std::string& text) {
  try {
    ParseConfig(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.category(), ErrorCategory::kConfig);
    int line = 0;
    if (std::sscanf(e.what(), "line %d:", &line) == 1) return line;
    return 0;
  }
  ADD_FAILURE() << "no error for: " << text;
  return -1;
}

TEST(ConfigTest, ParsesTheCubicGame) {
  const ParsedConfig c = ParseConfig(Slurp(Data("cubic.cfg")));
  ASSERT_TRUE(c.game.has_value());
  EXPECT_FALSE(c.is_family);
  EXPECT_EQ(c.game->action_a(), ActionSet::HalfLine(0));
  EXPECT_EQ(std::get<DifferenceForm>(c.game->payoff()).phi, (Polynomial{0, -1, 0, 1}));
}

TEST(ConfigTest, ParsesAMatrixAndSolverKeys) {
  const ParsedConfig c = ParseConfig("[game]\nform=matrix matrix=1,2;3,4\ntol=1e-4 max_rounds=3\n");
  EXPECT_EQ(std::get<MatrixForm>(c.game->payoff()).entries,
            Matrix::FromRows({{1, 2}, {3, 4}}));
  EXPECT_EQ(c.solver.tol, 1e-4);
  EXPECT_EQ(c.solver.max_rounds, 3);
}

TEST(ConfigTest, ParsesFamilies) {
  const ParsedConfig c = ParseConfig(Slurp(Data("step_family.cfg")));
  ASSERT_TRUE(c.family.has_value());
  EXPECT_EQ(c.x_grid.size(), 33u);
  EXPECT_EQ(std::get<ShiftedDifference>(c.family->form).psi, ParameterFunction::Step(0, 5));
}

TEST(ConfigTest, ErrorsCarryTheLineNumber) {
  EXPECT_EQ(ConfigErrorLine("[game]\nform=difference\nphi=0,1\nbogus=3\n"), 4);
  EXPECT_EQ(ConfigErrorLine("[game]\nform=difference phi=0,1\nphi=0,2\n"), 3);
  EXPECT_EQ(ConfigErrorLine("[game]\nform=matrix\nmatrix=1,2;3\n"), 3);
  EXPECT_EQ(ConfigErrorLine("[game]\nform=difference phi=0,x\n"), 2);
  EXPECT_EQ(ConfigErrorLine("[game]\nform=matrix matrix=1\naction_set_a=fullline\n"), 3);
  EXPECT_GE(ConfigErrorLine("[game]\nform=difference\n"), 0);
  EXPECT_GE(ConfigErrorLine("form=difference phi=1\n"), 0);
}

TEST(ConfigTest, NormalizedFormIsAFixedPoint) {
  for (const char* name : {"cubic.cfg", "square.cfg", "quadratic.cfg", "matrix.cfg", "rps.cfg",
                           "sine_family.cfg", "step_family.cfg", "separable_family.cfg"}) {
    const ParsedConfig first = ParseConfig(Slurp(Data(name)));
    const ParsedConfig second = ParseConfig(first.normalized);
    EXPECT_EQ(first.normalized, second.normalized) << name;
    if (first.game) EXPECT_EQ(*first.game, *second.game) << name;
    EXPECT_EQ(first.x_grid, second.x_grid) << name;
  }
}

TEST(ConfigTest, Helpers) {
  EXPECT_EQ(FormatNumber(0.1), "0.1");
  EXPECT_EQ(FormatNumber(-2), "-2");
  EXPECT_EQ(ParseStrategy("0.4:0,0.6:1"), FiniteSupportMeasure({{0, 0.4}, {1, 0.6}}));
  EXPECT_EQ(ParseNumberList("1,2,3"), (std::vector<double>{1, 2, 3}));
  EXPECT_THROW(ParseStrategy("0.4:0,0.7:1"), Error);
}

TEST(CommandTest, ExitCodes) {
  EXPECT_EQ(Invoke("validate", "cubic.cfg").code, kExitOk);
  const Outcome bad = Invoke("validate", "square.cfg");
  EXPECT_EQ(bad.code, kExitInvalidGame);
  EXPECT_NE(bad.out.find("condition (v) violated"), std::string::npos);
  EXPECT_EQ(Invoke("frobnicate", "cubic.cfg").code, kExitConfig);
  EXPECT_EQ(Invoke("validate", "no_such_file.cfg").code, kExitConfig);
  EXPECT_EQ(Invoke("solve", "square.cfg").code, kExitInvalidGame);
  EXPECT_EQ(Invoke("sweep", "cubic.cfg").code, kExitConfig);
  const Outcome err = Invoke("frobnicate", "cubic.cfg");
  EXPECT_EQ(err.err.rfind("error: ", 0), 0u);
  EXPECT_EQ(std::count(err.err.begin(), err.err.end(), '\n'), 1);
}

TEST(CommandTest, PureCheckReportsTheGap) {
  const Outcome r = Invoke("pure-check", "cubic.cfg");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("no pure solution"), std::string::npos);
  EXPECT_NE(r.out.find("-0.3849"), std::string::npos);
  EXPECT_NE(Invoke("pure-check", "quadratic.cfg").out.find("pure saddle point"),
            std::string::npos);
}

TEST(CommandTest, DiagnoseJson) {
  CommandOptions opts;
  opts.command = "diagnose";
  opts.config_path = Data("cubic.cfg");
  opts.json = true;
  const Outcome r = Invoke(opts);
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("theorems_applicable"));
  EXPECT_EQ(j["theorems_applicable"]["pure_solution"], "none");
  EXPECT_TRUE(j["validity"]["valid"].get<bool>());
}

TEST(CommandTest, SolveWritesDeterministicFiles) {
  CommandOptions opts;
  opts.command = "solve";
  opts.config_path = Data("matrix.cfg");
  const fs::path dir_a = ScratchDir("solve_a");
  const fs::path dir_b = ScratchDir("solve_b");
  opts.out_dir = dir_a.string();
  const Outcome a = Invoke(opts);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  opts.out_dir = dir_b.string();
  opts.jobs = 2;
  const Outcome b = Invoke(opts);
  ASSERT_EQ(b.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  for (const char* f : {"report.json", "trace.csv"}) {
    const std::string x = Slurp(dir_a / f);
    EXPECT_FALSE(x.empty()) << f;
    EXPECT_EQ(x, Slurp(dir_b / f)) << f;
  }
}

TEST(CommandTest, CertifyAndEnvelope) {
  CommandOptions opts;
  opts.command = "certify";
  opts.config_path = Data("cubic.cfg");
  opts.strategy = "0.5:0,0.5:1";
  EXPECT_EQ(Invoke(opts).code, kExitOk);
  opts.strategy = "";
  EXPECT_EQ(Invoke(opts).code, kExitConfig);
  opts.command = "envelope";
  opts.points = "0,1";
  const Outcome r = Invoke(opts);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_FALSE(r.out.empty());
}

TEST(CommandTest, SweepWritesItsReports) {
  CommandOptions opts;
  opts.command = "sweep";
  opts.config_path = Data("separable_family.cfg");
  opts.out_dir = ScratchDir("sweep").string();
  const Outcome r = Invoke(opts);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char* f : {"sweep.csv", "plotdata.csv", "report.json"}) {
    EXPECT_TRUE(fs::exists(fs::path(opts.out_dir) / f)) << f;
  }
  const std::string plot = Slurp(fs::path(opts.out_dir) / "plotdata.csv");
  EXPECT_EQ(plot.rfind("x,value,lower,upper\n", 0), 0u);
  EXPECT_EQ(std::count(plot.begin(), plot.end(), '\n'), 4);
}

}  // namespace
}  // namespace zsg::cli
