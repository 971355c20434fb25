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

#ifndef ZSG_TOOLS_COMMANDS_HPP_
#define ZSG_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zsg::cli {

enum ExitCode {
  kExitOk = 0,
  kExitOther = 1,
  kExitConfig = 2,
  kExitInvalidGame = 3,
  kExitNotConverged = 4,
};

struct CommandOptions {
  std::string command;  // validate envelope diagnose pure-check solve certify sweep
  std::string config_path;
  std::string out_dir;  // no files are written when empty
  std::optional<double> tol;
  std::size_t jobs = 1;
  bool json = false;
  std::string strategy;  // certify: "p1:a1,p2:a2"
  std::string points;    // envelope: "x1,x2,..."
};

const std::vector<std::string>& CommandNames();

// Errors are reported on `err` as one line "error: <category>: <message>".
int RunCommand(const CommandOptions& options, std::ostream& out,
               std::ostream& err);

}  // namespace zsg::cli

#endif  // ZSG_TOOLS_COMMANDS_HPP_
