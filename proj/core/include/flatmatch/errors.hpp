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

#ifndef FLATMATCH_ERRORS_HPP_
#define FLATMATCH_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flatmatch {

// Malformed instance text. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, std::string field)
      : std::runtime_error(what), line_(line), field_(std::move(field)) {}
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

// Well-formed input that does not describe a valid object, e.g. a flat family
// that violates a matroid axiom.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string axiom, const std::string& what)
      : std::runtime_error(what), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t partial_count, std::size_t cap)
      : std::runtime_error("flat cap of " + std::to_string(cap) +
                           " exceeded after " + std::to_string(partial_count) +
                           " flats"),
        partial_count_(partial_count) {}
  std::size_t partial_count() const { return partial_count_; }

 private:
  std::size_t partial_count_;
};

// An operation was called outside its domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A postcondition or structural guarantee failed. Indicates a bug or an input
// that slipped past validation.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace flatmatch

#endif  // FLATMATCH_ERRORS_HPP_
