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

#ifndef ZSG_SRC_FORMAT_HPP_
#define ZSG_SRC_FORMAT_HPP_

#include <charconv>
#include <string>

namespace zsg::detail {

// Shortest decimal that reads back to the same double.
inline std::string Shortest(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace zsg::detail

#endif  // ZSG_SRC_FORMAT_HPP_
