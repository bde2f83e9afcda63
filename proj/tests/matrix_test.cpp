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
#include "finring/galois.hpp"
#include "finring/matrix.hpp"
#include "finring/modular.hpp"
#include "finring/ring_expr.hpp"
#include "oracles.hpp"

using namespace finring;

TEST(Matrix, EncodingIsRowMajorLsbFirst) {
  const auto m = make_matrix_ring(2, make_zn(3));
  EXPECT_EQ(m->encode({1, 2, 0, 1}), 1u + 2 * 3 + 0 * 9 + 1 * 27);
  EXPECT_EQ(m->decode(m->one()), (MatrixArith::Entries{1, 0, 0, 1}));
  EXPECT_EQ(m->pretty(m->encode({0, 1, 2, 0})), "[[0,1],[2,0]]");
}

TEST(Matrix, UnipotentInverseOverZ2) {
  const auto m = make_matrix_ring(2, make_zn(2));
  const Index u = m->encode({1, 1, 0, 1});
  ASSERT_TRUE(m->inverse(u));
  EXPECT_EQ(*m->inverse(u), u);
  EXPECT_EQ(m->mul(u, u), m->one());
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  for (const char* expr : {"Z(4)", "Z(6)", "GF(4)", "GF(9)"}) {
    const auto base = make_ring(expr);
    for (std::size_t n : {1, 2, 3}) {
      const MatrixArith arith(n, base);
      std::uint64_t s = 12345;
      for (int trial = 0; trial < 300; ++trial) {
        MatrixArith::Entries a(n * n);
        for (auto& e : a) {
          s = s * 6364136223846793005ull + 1442695040888963407ull;
          e = (s >> 33) % base->order();
        }
        const Index leibniz = oracle::leibniz_det(
            a, n, base->one(), [&](Index x, Index y) { return base->add(x, y); },
            [&](Index x, Index y) { return base->mul(x, y); }, [&](Index x) { return base->neg(x); });
        EXPECT_EQ(arith.determinant(a), leibniz) << expr << " n=" << n;
      }
    }
  }
}

TEST(Matrix, ThreeInverseRoutesAgreeOverFields) {
  for (const char* expr : {"M(2, Z(2))", "M(2, Z(3))", "M(2, GF(4))", "M(3, Z(2))", "M(2, Z(5))"}) {
    const auto r = make_ring(expr);
    const auto& m = static_cast<const MatrixRing&>(*r);
    for (Index x = 0; x < m.order(); ++x) {
      const auto by_det = m.inverse_by_determinant(x);
      EXPECT_EQ(by_det, m.inverse_by_row_reduction(x)) << expr << " " << m.pretty(x);
      if (m.order() <= 256) {
        EXPECT_EQ(by_det, oracle::two_sided_inverse(m, x)) << expr;
      }
    }
  }
}

TEST(Matrix, AdjugateInverseOverNonField) {
  const auto r = make_ring("M(2, Z(4))");
  const auto& m = static_cast<const MatrixRing&>(*r);
  for (Index x = 0; x < m.order(); ++x) {
    EXPECT_EQ(m.inverse_by_determinant(x), oracle::two_sided_inverse(m, x));
  }
  EXPECT_THROW(m.inverse_by_row_reduction(1), ContractError);
}

TEST(Matrix, GlCountsByLeibnizOracle) {
  struct Case {
    std::size_t n;
    std::uint64_t q;
    std::uint64_t expected;
  };
  for (auto c : {Case{1, 5, 4}, Case{2, 2, 6}, Case{2, 3, 48}, Case{2, 4, 180}, Case{3, 2, 168}}) {
    const auto f = make_gf(c.q);
    EXPECT_EQ(oracle::gl_count(c.n, *f), c.expected);
    EXPECT_EQ(oracle::gl_product_form(c.n, c.q), c.expected);
  }
}

TEST(Triangular, Layout) {
  const auto t = make_triangular_ring(2, make_zn(2));
  EXPECT_EQ(t->order(), 8u);
  // free positions (0,0), (0,1), (1,1) weighted 1, 2, 4
  EXPECT_EQ(t->encode({0, 1, 0, 0}), 2u);
  EXPECT_EQ(t->pretty(2), "[[0,1],[0,0]]");
  EXPECT_EQ(t->one(), 5u);
  EXPECT_EQ(t->decode(7), (MatrixArith::Entries{1, 1, 0, 1}));
}

TEST(Triangular, UnitsAreUnitDiagonal) {
  for (std::size_t n : {1, 2, 3}) {
    const auto t = make_triangular_ring(n, make_zn(3));
    for (Index x = 0; x < t->order(); ++x) {
      const auto e = t->decode(x);
      bool diagonal_units = true;
      for (std::size_t i = 0; i < n; ++i) diagonal_units &= e[i * n + i] != 0;
      EXPECT_EQ(t->inverse(x).has_value(), diagonal_units);
    }
  }
}
