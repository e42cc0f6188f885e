// Copyright 2026 The lapdom Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lapdom {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (out-of-range node, infeasible
// (n, m), non-split input to a split construction, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `offset` is the byte offset inside the record (or the
// 1-based line number for line-oriented formats, see the throwing function).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// The eigensolver exhausted its sweep budget.
class SolverError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed its guard.
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what, std::uint64_t count)
      : Error(what), count_(count) {}
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t count_;
};

// A graph failed a Brouwer-type bound after re-verification. Never thrown for
// numerical noise: callers re-check with a tightened solver first.
class ConjectureViolation : public Error {
 public:
  ConjectureViolation(const std::string& what, int k, double margin)
      : Error(what), k_(k), margin_(margin) {}
  int k() const noexcept { return k_; }
  double margin() const noexcept { return margin_; }

 private:
  int k_;
  double margin_;
};

}  // namespace lapdom
