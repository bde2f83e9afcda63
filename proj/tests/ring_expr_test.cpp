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

#include <gtest/gtest.h>

#include "finring/error.hpp"
#include "finring/ring_expr.hpp"
#include "random_expr.hpp"

using namespace finring;

namespace {

using K = RingExpr::Kind;

RingExpr leaf(K k, std::uint64_t n) { return RingExpr{k, n, {}}; }
RingExpr node(K k, std::uint64_t n, std::vector<RingExpr> args) { return RingExpr{k, n, std::move(args)}; }

struct SyntaxFailure {
  std::size_t column;
  std::vector<std::string> expected;
  std::string found;
};

SyntaxFailure fail(const std::string& text) {
  try {
    parse_ring_expr(text);
  } catch (const ParseError& e) {
    return {e.column(), e.expected(), e.found()};
  }
  ADD_FAILURE() << "parsed: " << text;
  return {};
}

}  // namespace

TEST(RingExpr, GrammarCases) {
  EXPECT_EQ(parse_ring_expr("M(2, GF(4))"), node(K::kMatrix, 2, {leaf(K::kGF, 4)}));
  EXPECT_EQ(parse_ring_expr("Z(2) x Z(2) x Z(2)"),
            node(K::kProduct, 0, {leaf(K::kZn, 2), leaf(K::kZn, 2), leaf(K::kZn, 2)}));
  EXPECT_EQ(parse_ring_expr("UT(3, Z(2))"), node(K::kTriangular, 3, {leaf(K::kZn, 2)}));
  EXPECT_EQ(parse_ring_expr("B(3)"), leaf(K::kBoolean, 3));
  EXPECT_EQ(parse_ring_expr("Prod(Z(2), GF(9))"), node(K::kProduct, 0, {leaf(K::kZn, 2), leaf(K::kGF, 9)}));
  EXPECT_EQ(parse_ring_expr("Prod(Z(2))"), node(K::kProduct, 0, {leaf(K::kZn, 2)}));
  EXPECT_EQ(parse_ring_expr("(Z(2))"), leaf(K::kZn, 2));
  EXPECT_EQ(parse_ring_expr("(Z(2) x Z(3)) x Z(5)"),
            node(K::kProduct, 0, {node(K::kProduct, 0, {leaf(K::kZn, 2), leaf(K::kZn, 3)}), leaf(K::kZn, 5)}));
  EXPECT_EQ(parse_ring_expr("M(2, Z(2) x Z(3))"),
            node(K::kMatrix, 2, {node(K::kProduct, 0, {leaf(K::kZn, 2), leaf(K::kZn, 3)})}));
}

TEST(RingExpr, WhitespaceInsensitive) {
  const auto expected = parse_ring_expr("M(2, GF(4)) x Z(3)");
  EXPECT_EQ(parse_ring_expr("M(2,GF(4))xZ(3)"), expected);
  EXPECT_EQ(parse_ring_expr("  M ( 2 ,\tGF ( 4 ) )\n x  Z( 3 ) "), expected);
}

TEST(RingExpr, PhaseSeparation) {
  EXPECT_EQ(parse_ring_expr("GF(6)"), leaf(K::kGF, 6));
  try {
    make_ring("GF(6)");
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_NE(std::string(e.what()).find("not a prime power"), std::string::npos);
  }
  EXPECT_NO_THROW(parse_ring_expr("M(40, Z(2))"));
  EXPECT_THROW(make_ring("M(40, Z(2))"), ConstructionError);
  EXPECT_THROW(make_ring("B(33)"), ConstructionError);
}

TEST(RingExpr, ErrorsCarryColumnAndExpectedSet) {
  auto f = fail("Z(0)");
  EXPECT_EQ(f.column, 3u);

  f = fail("Z(2");
  EXPECT_EQ(f.column, 4u);
  EXPECT_EQ(f.expected, std::vector<std::string>{"')'"});
  EXPECT_EQ(f.found, "end of input");

  f = fail("z(2)");
  EXPECT_EQ(f.column, 1u);
  EXPECT_GE(f.expected.size(), 7u);

  f = fail("M(2 GF(4))");
  EXPECT_EQ(f.column, 5u);

  f = fail("Z(2) x");
  EXPECT_EQ(f.column, 7u);
  EXPECT_EQ(f.found, "end of input");

  f = fail("Z(2) Z(3)");
  EXPECT_EQ(f.column, 6u);

  f = fail("");
  EXPECT_EQ(f.column, 1u);

  f = fail("Z(99999999999999999999)");
  EXPECT_EQ(f.column, 3u);

  f = fail("Prod()");
  EXPECT_EQ(f.column, 6u);

  f = fail("GF(4");
  EXPECT_EQ(f.column, 5u);

  f = fail("Z(-1)");
  EXPECT_EQ(f.column, 3u);
}

TEST(RingExpr, ErrorMessage) {
  try {
    parse_ring_expr("Z(2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_STREQ(e.what(), "syntax error at column 4: expected ')', found end of input");
  }
}

TEST(RingExpr, PrettyPrint) {
  EXPECT_EQ(to_string(parse_ring_expr("M(2,GF(4))")), "M(2, GF(4))");
  EXPECT_EQ(to_string(parse_ring_expr("Z(2)xZ(3)xZ(5)")), "Z(2) x Z(3) x Z(5)");
  EXPECT_EQ(to_string(parse_ring_expr("(Z(2)xZ(3))xZ(5)")), "(Z(2) x Z(3)) x Z(5)");
  EXPECT_EQ(to_string(parse_ring_expr("Prod(Z(5))")), "Prod(Z(5))");
}

TEST(RingExpr, RandomRoundTrip) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 1000; ++i) {
    const RingExpr e = testgen::random_expr(rng, 4);
    ASSERT_LE(testgen::depth_of(e), 4);
    const std::string text = to_string(e);
    RingExpr back;
    ASSERT_NO_THROW(back = parse_ring_expr(text)) << text;
    EXPECT_EQ(back, e) << text;
  }
}
