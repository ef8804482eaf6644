// Copyright 2026 The Miura Flip Graph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIURA_ERROR_HPP
#define MIURA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace miura {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (bad index, wrong
/// dimensions, malformed text, improper coloring, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed the configured state-count cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace miura

#endif  // MIURA_ERROR_HPP
