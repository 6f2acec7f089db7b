// Copyright 2026 The cavitytk Authors
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

namespace cavitytk {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the documented domain of an operation.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A value leaves the mathematical domain of a formula (log of a
/// non-positive number, position outside the expansion range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic between quantities of incompatible dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A propagated function evaluated to a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Measured inputs are mutually incompatible (e.g. r1 outside (0, 1)).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// The stray-charge curvature overwhelms the trap: k_t + s_q B <= 0.
class StabilityError : public Error {
 public:
  using Error::Error;
};

/// A budget inversion could not bracket its target.
class SearchError : public Error {
 public:
  using Error::Error;
};

/// Tauc edge window has too few points or a non-positive slope.
class EdgeDetectionError : public Error {
 public:
  using Error::Error;
};

/// Scenario document failed validation.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// File could not be read or parsed.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace cavitytk
