// Copyright 2026 The eprsim Authors
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

#ifndef EPRSIM_ERRORS_HPP_
#define EPRSIM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace eprsim {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition or domain invariant was violated (bad dimensions,
// non-physical states, incomplete instruments, malformed parameters).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// A structured input document could not be parsed. Carries a location
// string ("/inner/n", "byte 17") usable in diagnostics.
class ParseError : public Error {
 public:
  ParseError(const std::string& location, const std::string& message)
      : Error("device spec error at " + location + ": " + message),
        location_(location) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace eprsim

#endif  // EPRSIM_ERRORS_HPP_
