// Copyright 2026 The mixcop Authors
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

#ifndef MIXCOP_ERROR_HPP_
#define MIXCOP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mixcop {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function or family.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data (sizes, categories, columns).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A numerical routine could not produce a trustworthy value.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Root bracketing failed: no sign change over the search interval.
class BracketError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Every optimizer start produced a non-finite objective, or a fit could
// not be completed.
class OptimizationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace mixcop

#endif  // MIXCOP_ERROR_HPP_
