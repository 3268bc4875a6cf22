// Copyright 2026 The chipfire Authors
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

namespace chipfire {

// Input that violates an operation's precondition (bad index, loop edge,
// empty egg, disconnected host, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A theorem or construction was applied outside its hypotheses.
class HypothesisError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Malformed text input. Line and column are 1-based; column 0 means the
// whole line.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : ValidationError("line " + std::to_string(line) +
                        (column ? ", column " + std::to_string(column) : "") +
                        ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A cross-check between two independent computations disagreed. Always a
// bug, never a user error.
class SoundnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace chipfire
