// Copyright 2026 The ggrasp Authors
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

#ifndef GGRASP_ERROR_HPP
#define GGRASP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ggrasp {

/// Base class for all ggrasp errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A config or scenario value violates a documented invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Estimator configuration rejected (bounds, particle count, noise terms).
class InvalidConfigError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Malformed input file; message names the offending field or line.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A tactile patch with zero elements was handed to an integral operation.
class EmptyPatchError : public Error {
 public:
  using Error::Error;
};

/// Surface gradient vanished at the sample point; normal is undefined.
class DegenerateGradientError : public Error {
 public:
  using Error::Error;
};

/// A tactile log contained no patch records.
class EmptyLogError : public Error {
 public:
  using Error::Error;
};

}  // namespace ggrasp

#endif  // GGRASP_ERROR_HPP
