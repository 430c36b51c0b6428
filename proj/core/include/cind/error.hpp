// Copyright 2026 The cind Authors. All Rights Reserved.
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

#ifndef CIND_ERROR_HPP_
#define CIND_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cind {

// Base for every error the engine reports. Catch this at API boundaries.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `position` is a 0-based character offset (or line
// number for line-oriented formats, see `line`).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position, std::size_t line = 0)
      : Error(message), position_(position), line_(line) {}

  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

// Well-formed input that violates a domain invariant (overlapping atom sets,
// a run outside its domain, a non-existent vertex, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace cind

#endif  // CIND_ERROR_HPP_
