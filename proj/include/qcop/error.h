// Copyright 2026 The qcop Authors
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

#ifndef QCOP_ERROR_H_
#define QCOP_ERROR_H_

#include <stdexcept>
#include <string>

namespace qcop {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes disagree (matrix vs. vector vs. point dimensions).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A value violates a documented precondition (range, structure, finiteness).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine was asked to work beyond its size cap.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// The covering system has no feasible point.
class Infeasible : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `line()` is 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace qcop

#endif  // QCOP_ERROR_H_
