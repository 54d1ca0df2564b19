// Copyright 2026 The teqkd Authors
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

namespace teqkd {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside an operation's documented domain.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Adaptive quadrature exhausted its subdivision budget before meeting tolerance.
class NonConvergence : public Error {
 public:
  explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

/// Monte Carlo trial cap reached before the requested number of error events.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

/// Root finder could not bracket the target inside its search interval.
class NoBracket : public Error {
 public:
  explicit NoBracket(const std::string& msg) : Error(msg) {}
};

/// Not enough samples/points to evaluate the requested statistic.
class InsufficientData : public Error {
 public:
  explicit InsufficientData(const std::string& msg) : Error(msg) {}
};

/// Algebraic or iterative decoder could not produce a valid correction.
class DecodeFailure : public Error {
 public:
  explicit DecodeFailure(const std::string& msg) : Error(msg) {}
};

/// Randomized code construction failed after its retry budget.
class ConstructionFailure : public Error {
 public:
  explicit ConstructionFailure(const std::string& msg) : Error(msg) {}
};

/// Wire-protocol violations.
class ProtocolError : public Error {
 public:
  explicit ProtocolError(const std::string& msg) : Error(msg) {}
};
class VersionMismatch : public ProtocolError {
 public:
  explicit VersionMismatch(const std::string& msg) : ProtocolError(msg) {}
};
class MalformedFrame : public ProtocolError {
 public:
  explicit MalformedFrame(const std::string& msg) : ProtocolError(msg) {}
};
class Timeout : public ProtocolError {
 public:
  explicit Timeout(const std::string& msg) : ProtocolError(msg) {}
};

}  // namespace teqkd
