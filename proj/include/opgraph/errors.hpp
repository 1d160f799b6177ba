// Copyright 2026 The opgraph developers
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

namespace opgraph {

// Base class for every error thrown by the library.
class OpgraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Incompatible or invalid matrix shapes.
class DimensionError : public OpgraphError {
 public:
  using OpgraphError::OpgraphError;
};

// Input outside the mathematical domain of an operation
// (non-Hermitian where Hermitian is required, non-unit vectors, ...).
class DomainError : public OpgraphError {
 public:
  using OpgraphError::OpgraphError;
};

// Matrix has an eigenvalue below the PSD tolerance.
class NotPsdError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Infeasible or out-of-range parameter values.
class ParameterError : public OpgraphError {
 public:
  using OpgraphError::OpgraphError;
};

// A structural invariant of a domain object does not hold.
class ValidationError : public OpgraphError {
 public:
  using OpgraphError::OpgraphError;
};

// Malformed serialized document.
class ParseError : public OpgraphError {
 public:
  using OpgraphError::OpgraphError;
};

}  // namespace opgraph
