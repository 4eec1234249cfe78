// Copyright 2026 The skrates Authors.
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

#ifndef SKRATES_ERROR_HPP_
#define SKRATES_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace skrates {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invalid input text (JSON, rationals, vertex lists).
class InputError : public Error {
 public:
  using Error::Error;
};

// A well-formed request outside an operation's domain, e.g. a PIN-only
// operation applied to a hypergraph with a 3-vertex edge.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed its configured size cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagreed. Always a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace skrates

#endif  // SKRATES_ERROR_HPP_
