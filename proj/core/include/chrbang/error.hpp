// Copyright 2026 The chrbang Authors
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

#ifndef CHRBANG_ERROR_HPP_
#define CHRBANG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chrbang {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class NotRangeRestricted : public Error {
 public:
  using Error::Error;
};

class TriviallyPathological : public Error {
 public:
  TriviallyPathological(const std::string& rule)
      : Error("rule '" + rule + "' is trivially pathological"), rule_(rule) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

class ResidualCandidateConstraint : public Error {
 public:
  using Error::Error;
};

}  // namespace chrbang

#endif  // CHRBANG_ERROR_HPP_
