// Copyright 2026 The Quip Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace quip {

// Base of every error raised by the library. The CLI maps the subclasses to
// exit statuses, so new failure kinds should derive from one of these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

// Zero polynomial asked for its leading term.
class UndefinedLeadingTermError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap (pair queue, degree, element count) was hit.
class ComputationLimitError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, std::string reason)
      : Error(what), reason_(std::move(reason)) {}
  explicit InfeasibleError(const std::string& what)
      : Error(what), reason_("infeasible") {}

  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

class UnboundedError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InvariantError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  int line_;
  int column_;
};

// Structured-document validation failure; `location` is a JSON pointer.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& location, const std::string& what)
      : Error(location.empty() ? what : location + ": " + what),
        location_(location) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

class NoSeedError : public Error {
 public:
  NoSeedError(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}

  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace quip
