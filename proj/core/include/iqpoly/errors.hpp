// Copyright 2026 The iqpoly Authors.
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

namespace iqpoly {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer or exponent arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A rational expression that should have been a Laurent polynomial was not.
class DenominatorError : public Error {
 public:
  using Error::Error;
};

/// A polynomial failed an invariance requirement for a parabolic subgroup.
class InvarianceError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Coefficient extraction from a generating-function term is not finite.
class UnboundedExtraction : public Error {
 public:
  using Error::Error;
};

/// Neither coordinate reading reproduces a geometric class.
class IdentificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace iqpoly
