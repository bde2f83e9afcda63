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

#ifndef FINRING_RING_EXPR_HPP_
#define FINRING_RING_EXPR_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

// AST of the ring-expression language:
//
//   expr := term ( "x" term )*
//   term := "Z" "(" INT ")" | "GF" "(" INT ")" | "B" "(" INT ")"
//         | "M" "(" INT "," expr ")" | "UT" "(" INT "," expr ")"
//         | "Prod" "(" expr ( "," expr )* ")" | "(" expr ")"
//   INT  := decimal >= 1
//
// A chain a x b x c becomes one flat product node; parentheses group.
struct RingExpr {
  enum class Kind { kZn, kGF, kMatrix, kTriangular, kProduct, kBoolean };

  Kind kind = Kind::kZn;
  std::uint64_t n = 0;          // modulus, field order, dimension, or B's exponent
  std::vector<RingExpr> args;   // base ring of M/UT, or product factors

  friend bool operator==(const RingExpr&, const RingExpr&) = default;
};

// Throws ParseError (1-based column, expected-token set) on bad syntax.
// Semantic problems such as GF(6) surface only in build_ring.
RingExpr parse_ring_expr(std::string_view text);

// Canonical text; parse_ring_expr(to_string(e)) == e.
std::string to_string(const RingExpr& e);

// Throws ConstructionError when the described ring cannot be built.
RingPtr build_ring(const RingExpr& e);

inline RingPtr make_ring(std::string_view text) { return build_ring(parse_ring_expr(text)); }

}  // namespace finring

#endif  // FINRING_RING_EXPR_HPP_
