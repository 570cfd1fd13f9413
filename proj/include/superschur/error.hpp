/* Copyright 2026 The superschur Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef SUPERSCHUR_ERROR_HPP
#define SUPERSCHUR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace superschur {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in ambient spaces of different dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation requiring a nilpotent algebra received one that is not.
class NotNilpotent : public Error {
 public:
  using Error::Error;
};

/// An integer argument (degree, index of a series term, ...) is out of range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Inputs violate a stated precondition of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A consistency check that must hold mathematically failed.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace superschur

#endif  // SUPERSCHUR_ERROR_HPP
