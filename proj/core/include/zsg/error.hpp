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

#ifndef ZSG_ERROR_HPP_
#define ZSG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace zsg {

// Error categories are stable strings; the command-line tool prints them as
// the first token of its one-line error message.
enum class ErrorCategory {
  kDomain,       // action outside its action set, malformed measure, ...
  kUnsupported,  // form/measure combination the library does not decide
  kInvalidGame,  // boundedness conditions of a game fail
  kRefused,      // solver precondition (existence certificate) missing
  kConfig,       // configuration text could not be parsed
  kNumerical,    // iteration cap or similar numerical failure
};

const char* CategoryName(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorCategory::kDomain, what) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what)
      : Error(ErrorCategory::kUnsupported, what) {}
};

}  // namespace zsg

#endif  // ZSG_ERROR_HPP_
