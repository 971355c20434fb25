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

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  zsg::cli::CommandOptions opts;
  CLI::App app{"Analyze and solve two-person zero-sum games on the real line"};
  app.add_option("command", opts.command, "validate | envelope | diagnose | "
                                          "pure-check | solve | certify | sweep")
      ->required()
      ->check(CLI::IsMember(zsg::cli::CommandNames()));
  app.add_option("--config", opts.config_path, "Game or family config file")
      ->required();
  app.add_option("--out", opts.out_dir, "Directory for report.json and CSV files");
  app.add_option("--tol", opts.tol, "Certified-gap tolerance of the solver");
  app.add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--json", opts.json, "Machine-readable output");
  app.add_option("--strategy", opts.strategy, "certify: weight:point,...");
  app.add_option("--points", opts.points, "envelope: comma-separated actions");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: config: " << e.what() << '\n';
    return zsg::cli::kExitConfig;
  }
  return zsg::cli::RunCommand(opts, std::cout, std::cerr);
}
