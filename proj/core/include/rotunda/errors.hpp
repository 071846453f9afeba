// Copyright 2026 The Authors.
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

#ifndef ROTUNDA_ERRORS_HPP
#define ROTUNDA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rotunda {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration refused to run because the ground set (or vertex set)
/// exceeds the configured bound.
class BoundError : public Error {
 public:
  explicit BoundError(const std::string& what) : Error(what) {}
};

/// Malformed input: failed axiom validation, bad file contents,
/// out-of-range ids, and similar.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// An operation was invoked on an object that does not satisfy its
/// hypotheses (e.g. a rotunda graph of a non-saturated matroid).
class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& what) : Error(what) {}
};

/// Global bound on ground-set size for flat/circuit/subset enumerations.
/// Initialised from the ROTUNDA_ENUM_BOUND environment variable when set,
/// 16 otherwise. Thread-safe.
int enumeration_bound();
void set_enumeration_bound(int bound);

/// Throws BoundError when `n` exceeds the enumeration bound.
void check_enumeration_bound(int n, const char* operation);

}  // namespace rotunda

#endif  // ROTUNDA_ERRORS_HPP
