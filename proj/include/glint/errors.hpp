// Copyright 2026 The glint authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GLINT_ERRORS_HPP
#define GLINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glint {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not match (non-square matrix, tuple length vs photon
// count, mixed permutation sizes, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input is structurally valid but the requested size exceeds what the
// algorithm is rated for (factorial or exponential blowup guard).
class SizeError : public Error {
 public:
  using Error::Error;
};

// A parameter lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A computation left the representable or trustworthy floating-point range
// (underflow of a density, vanishing pivot, ...).
class NumericRangeError : public Error {
 public:
  using Error::Error;
};

// Input data fails a declared invariant (non-finite entries, broken
// unitarity, malformed config file, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace glint

#endif  // GLINT_ERRORS_HPP
