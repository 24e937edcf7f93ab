// Copyright 2026 The gmspec Authors.
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

#ifndef GMSPEC_ERRORS_HPP_
#define GMSPEC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gmspec {

// Input outside an operation's domain. The CLI maps this to exit code 2.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An internal identity failed (for example an inexact division that must be
// exact). Always indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::logic_error(what) {}
};

// A configured size bound was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace gmspec

#endif  // GMSPEC_ERRORS_HPP_
