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

#include "finring/error.hpp"

#include <sstream>

namespace finring {

namespace {

std::string axiom_message(const std::string& axiom, const std::vector<std::size_t>& witness) {
  std::ostringstream out;
  out << "ring axiom violated: " << axiom;
  if (!witness.empty()) {
    out << " (witness";
    for (auto w : witness) out << ' ' << w;
    out << ')';
  }
  return out.str();
}

std::string parse_message(std::size_t column, const std::vector<std::string>& expected,
                          const std::string& found) {
  std::ostringstream out;
  out << "syntax error at column " << column << ": expected ";
  if (expected.size() == 1) {
    out << expected.front();
  } else {
    out << "one of {";
    for (std::size_t i = 0; i < expected.size(); ++i) out << (i ? ", " : "") << expected[i];
    out << '}';
  }
  out << ", found " << found;
  return out.str();
}

}  // namespace

AxiomError::AxiomError(std::string axiom, std::vector<std::size_t> witness)
    : ConstructionError(axiom_message(axiom, witness)),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

ParseError::ParseError(std::size_t column, std::vector<std::string> expected, std::string found)
    : Error(parse_message(column, expected, found)),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

}  // namespace finring
