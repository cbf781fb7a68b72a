// Copyright 2026 The tendon-unit Authors.
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
#include <utility>

namespace tendon {

/// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition or type invariant.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The pressure quadratic has no finite non-negative root at this tilt.
class NoPhysicalPressure : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

class NoSignChange : public SolverError {
 public:
  using SolverError::SolverError;
};

/// The target function is undefined at a bracket endpoint or visited midpoint.
class InfeasibleBracket : public SolverError {
 public:
  InfeasibleBracket(const std::string& what, double at)
      : SolverError(what), at_(at) {}
  double at() const noexcept { return at_; }

 private:
  double at_;
};

/// Bisection stopped before reaching tolerance; carries the best bracket.
class NonConverged : public SolverError {
 public:
  NonConverged(const std::string& what, double lo, double hi)
      : SolverError(what), lo_(lo), hi_(hi) {}
  double bracket_lo() const noexcept { return lo_; }
  double bracket_hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

class MaxIterExceeded : public NonConverged {
 public:
  using NonConverged::NonConverged;
};

class SensitivityUnavailable : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed configuration that violates an invariant; names the field.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace tendon
