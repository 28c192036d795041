// Copyright 2026 The bellkit Authors
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

namespace bellkit {

/// Malformed input: wrong dimensions, non-unit vectors, non-Hermitian
/// matrices, unparseable documents. Maps to CLI exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what_arg)
      : std::invalid_argument(what_arg) {}
};

/// Well-formed input that is mathematically rejected, e.g. a state that does
/// not maximally violate the inequality, or a non-orthogonal observable pair
/// fed to the frame construction. Maps to CLI exit code 3.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

}  // namespace bellkit
