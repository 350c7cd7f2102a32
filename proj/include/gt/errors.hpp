// Copyright 2026 The gt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GT_ERRORS_HPP
#define GT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A game failed structural validation before reaching a solver.
class InvalidGame : public Error {
 public:
  using Error::Error;
};

/// A solver that needs strict preferences was handed a game with ties.
class StrictnessRequired : public Error {
 public:
  using Error::Error;
};

/// superrational() on a matrix that is not symmetric.
class NotSymmetric : public Error {
 public:
  NotSymmetric(std::size_t row, std::size_t col, const std::string& message)
      : Error(message), row_(row), col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// Operation defined for a different number of players.
class WrongPlayerCount : public Error {
 public:
  using Error::Error;
};

/// Normal-form conversion would produce more strategies than allowed.
class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};

/// Input too large for the brute-force oracle.
class ScaleExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

/// Random-game configuration out of bounds.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A broken internal invariant. Seeing one means a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gt

#endif  // GT_ERRORS_HPP
