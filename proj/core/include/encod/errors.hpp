// Copyright 2026 The EnCoD Authors.
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

#ifndef ENCOD_ERRORS_HPP_
#define ENCOD_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace encod {

// Base of every error thrown by the library. Input problems (malformed
// files, bad labels, invalid configuration) derive from InputError so the
// CLI can map them to a distinct exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A label that is not part of the graph.
class LabelError : public InputError {
 public:
  explicit LabelError(const std::string& label)
      : InputError("unknown vertex label '" + label + "'"), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

// A vertex of the graph is missing from a per-vertex document.
class CoverageError : public InputError {
 public:
  explicit CoverageError(const std::string& label)
      : InputError("vertex '" + label + "' is missing"), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class DuplicateError : public InputError {
 public:
  explicit DuplicateError(const std::string& label)
      : InputError("vertex '" + label + "' listed more than once"),
        label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A row or vector that cannot be normalized (all zeros).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class EmptyEnsembleError : public Error {
 public:
  EmptyEnsembleError() : Error("ensemble contains no base communities") {}
};

class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace encod

#endif  // ENCOD_ERRORS_HPP_
