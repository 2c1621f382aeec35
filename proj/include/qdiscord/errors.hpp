// Copyright 2026 The qdiscord Authors
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

namespace qdiscord {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix failed the density-matrix checks (Hermiticity, trace, positivity).
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// The reduced state of subsystem b is (numerically) pure, so no channel
/// decomposition exists.
class SingularMarginal : public Error {
 public:
  using Error::Error;
};

/// A specialized method was requested for a state outside its domain.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A measurement outcome has vanishing probability; its conditional state is
/// undefined.
class DegenerateOutcome : public Error {
 public:
  using Error::Error;
};

/// Malformed density-matrix text.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace qdiscord
