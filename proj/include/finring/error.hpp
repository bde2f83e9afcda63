// Copyright 2026 The finring Authors.
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

#ifndef FINRING_ERROR_HPP_
#define FINRING_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace finring {

// Base of everything this library throws on bad input or exhausted budgets.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A ring could not be built from the given parameters or tables.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// A table failed one of the unital-ring axioms. `witness` holds the element
// indices that exhibit the failure (one to three of them).
class AxiomError : public ConstructionError {
 public:
  AxiomError(std::string axiom, std::vector<std::size_t> witness);

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::vector<std::size_t> witness_;
};

// Misuse of the API: elements of different rings mixed, index out of range,
// an operation applied to a ring that does not satisfy its precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed its configured budget. Never a partial answer.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what, std::string resume_token = {})
      : Error(what), resume_token_(std::move(resume_token)) {}

  const std::string& resume_token() const noexcept { return resume_token_; }

 private:
  std::string resume_token_;
};

// Syntax error in a ring expression. `column` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t column, std::vector<std::string> expected,
             std::string found);

  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t column_;
  std::vector<std::string> expected_;
  std::string found_;
};

}  // namespace finring

#endif  // FINRING_ERROR_HPP_
