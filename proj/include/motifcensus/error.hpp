// Copyright 2026 The motifcensus Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motif {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input parsed cleanly but holds no edges.
class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration (k out of range, ensemble too small, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A counter left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A broken internal invariant (negative frequency, indivisible sum, ...).
class InternalError : public Error {
 public:
  using Error::Error;
};

/// The brute-force enumerator was asked for more subgraphs than allowed.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace motif
