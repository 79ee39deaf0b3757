// Copyright 2026 The metasym Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace metasym {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (zero where a unit is required, a non-prime modulus, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The inputs are well formed but belong to a class the evaluator has no
/// formula for. Raised instead of guessing.
class UnsupportedDomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition (window bounds, membership predicate) failed.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A floating oracle value could not be matched to an exact candidate.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Two operators that should differ by a scalar do not.
class ModelInconsistencyError : public Error {
 public:
  using Error::Error;
};

/// An enumeration bound was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (files, expressions).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Numerical evaluation outside the region of convergence.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace metasym
