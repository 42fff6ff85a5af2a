/*
   Copyright 2026 The acfqe authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ACFQE_ERRORS_HPP
#define ACFQE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace acfqe {

/// Caller broke a precondition (mismatched rings, unknown variable, ...).
class UsageError : public std::logic_error {
 public:
  explicit UsageError(const std::string& what) : std::logic_error(what) {}
};

/// A configured cap was hit. `cap()` names the cap so drivers can report it.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string cap, const std::string& what)
      : std::runtime_error(what), cap_(std::move(cap)) {}
  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

/// A value could not be mapped into the requested field (e.g. a rational
/// coefficient whose denominator vanishes mod p).
class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax or name-resolution failure, with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error(format(line, column, msg)), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(int line, int column, const std::string& msg) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
  }
  int line_;
  int column_;
};

}  // namespace acfqe

#endif  // ACFQE_ERRORS_HPP
