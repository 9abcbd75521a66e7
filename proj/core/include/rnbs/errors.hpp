// Copyright 2026 The rnbs-sim Authors
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

#ifndef RNBS_ERRORS_HPP_
#define RNBS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rnbs {

// Root of the library's exception hierarchy. The two branches below split
// by blame: InvalidArgumentError means the caller handed us something
// malformed (CLI exit code 1); GuardError means a well-formed request hit a
// runtime limit or an impossible condition (CLI exit code 2).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Matrix/vector shape violations (zero dimension, non-square, mismatch).
class InvalidDimensionError : public InvalidArgumentError {
 public:
  using InvalidArgumentError::InvalidArgumentError;
};

// Scalar parameter outside its mathematical domain (e.g. probability > 1).
class DomainError : public InvalidArgumentError {
 public:
  using InvalidArgumentError::InvalidArgumentError;
};

// Malformed or inconsistent experiment configuration.
class InvalidConfigError : public InvalidArgumentError {
 public:
  using InvalidArgumentError::InvalidArgumentError;
};

// Photon-number bookkeeping mismatch (input total != output total).
class ConservationError : public InvalidArgumentError {
 public:
  using InvalidArgumentError::InvalidArgumentError;
};

class GuardError : public Error {
 public:
  using Error::Error;
};

// A computation was refused because it exceeds a hard size cap
// (permanent order, enumeration count, trial count).
class SizeGuardError : public GuardError {
 public:
  using GuardError::GuardError;
};

// The requested event set is empty or carries zero probability.
class InfeasibleError : public GuardError {
 public:
  using GuardError::GuardError;
};

// Post-selection would essentially never succeed; refuse rather than spin.
class CannotPostselectError : public GuardError {
 public:
  using GuardError::GuardError;
};

// A matrix failed the unitarity check; the message carries the defect.
class UnitarityError : public GuardError {
 public:
  using GuardError::GuardError;
};

// File could not be read, written, or parsed.
class IoError : public GuardError {
 public:
  using GuardError::GuardError;
};

}  // namespace rnbs

#endif  // RNBS_ERRORS_HPP_
