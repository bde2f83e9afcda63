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

#include "finring/analysis.hpp"
#include "finring/error.hpp"
#include "finring/galois.hpp"
#include "finring/ring_expr.hpp"
#include "oracles.hpp"

using namespace finring;

namespace {

const char* kRings[] = {
    "Z(2)", "Z(4)", "Z(6)", "Z(8)", "Z(9)", "Z(12)", "Z(30)", "GF(4)", "GF(8)", "GF(9)", "GF(16)",
    "M(2, Z(2))", "M(2, Z(3))", "UT(2, Z(2))", "UT(3, Z(2))", "UT(2, Z(4))", "UT(2, GF(4))",
    "B(3)", "Z(2) x Z(4)", "Z(3) x GF(4)", "M(1, Z(7))", "M(2, Z(2)) x Z(2)",
};

std::vector<std::string> pretty_all(const Ring& r, const std::vector<Index>& xs) {
  std::vector<std::string> out;
  for (Index x : xs) out.push_back(r.pretty(x));
  return out;
}

}  // namespace

TEST(Analysis, InvariantsMatchBruteForce) {
  for (const char* expr : kRings) {
    const auto r = make_ring(expr);
    EXPECT_EQ(characteristic(*r), oracle::characteristic(*r)) << expr;
    EXPECT_EQ(is_commutative(*r), oracle::commutative(*r)) << expr;
    EXPECT_EQ(is_boolean(*r), oracle::boolean(*r)) << expr;
    const auto u = unit_group(*r);
    const auto o = oracle::units(*r);
    EXPECT_EQ(u.units, o.list) << expr;
    EXPECT_EQ(u.count, o.list.size());
    EXPECT_EQ(u.sum, o.sum) << expr;
    EXPECT_TRUE(u.closure_verified);
    const auto t = unit_tally(*r);
    EXPECT_EQ(t.count, o.list.size());
    EXPECT_EQ(t.sum, o.sum);
    EXPECT_EQ(jacobson_radical(*r).members, oracle::radical(*r)) << expr;
  }
}

TEST(Analysis, KnownRadicals) {
  auto j = [](const char* e) {
    const auto r = make_ring(e);
    return pretty_all(*r, jacobson_radical(*r).members);
  };
  EXPECT_EQ(j("Z(4)"), (std::vector<std::string>{"0", "2"}));
  EXPECT_EQ(j("Z(6)"), (std::vector<std::string>{"0"}));
  EXPECT_EQ(j("Z(8)"), (std::vector<std::string>{"0", "2", "4", "6"}));
  EXPECT_EQ(j("UT(2, Z(2))"), (std::vector<std::string>{"[[0,0],[0,0]]", "[[0,1],[0,0]]"}));
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    EXPECT_TRUE(jacobson_radical(*make_gf(q)).is_zero) << q;
  }
  EXPECT_TRUE(is_semisimple(*make_ring("M(2, Z(3))")));
  EXPECT_FALSE(is_semisimple(*make_ring("Z(9)")));
}

TEST(Analysis, UnitsTrivialAndDivision) {
  EXPECT_EQ(unit_group(*make_ring("B(4)")).count, 1u);
  EXPECT_EQ(unit_group(*make_ring("UT(2, Z(2))")).count, 2u);
  const auto gf = make_ring("GF(9)");
  EXPECT_EQ(unit_group(*gf).count, 8u);
}

TEST(Analysis, InverseHelpers) {
  const auto r = make_ring("M(2, Z(3))");
  for (Index x = 0; x < r->order(); ++x) {
    EXPECT_EQ(inverse_by_scan(*r, x), oracle::two_sided_inverse(*r, x));
    const auto viaelem = is_unit(*r, r->elem(x));
    EXPECT_EQ(viaelem.has_value(), oracle::two_sided_inverse(*r, x).has_value());
  }
}

TEST(Analysis, FieldUnitSums) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    const auto f = make_gf(q);
    const auto u = unit_group(*f);
    EXPECT_EQ(u.count, q - 1);
    EXPECT_EQ(u.sum, q == 2 ? f->one() : f->zero()) << q;
  }
}

TEST(Analysis, PrimitiveElements) {
  EXPECT_EQ(primitive_element(*make_gf(5)), 2u);
  EXPECT_EQ(make_gf(4)->pretty(primitive_element(*make_gf(4))), "a");
  EXPECT_EQ(primitive_element(*make_gf(7)), 3u);
  for (std::uint64_t q : {2, 3, 4, 8, 9, 11, 16, 25, 27, 49, 64, 81, 125}) {
    const auto f = make_gf(q);
    const Index g = primitive_element(*f);
    EXPECT_EQ(multiplicative_order(*f, g), q - 1) << q;
    // brute force: powers of g cover every nonzero element
    std::vector<bool> hit(q, false);
    Index x = f->one();
    for (std::uint64_t k = 0; k + 1 < q; ++k, x = f->mul(x, g)) hit[x] = true;
    for (Index y = 1; y < q; ++y) EXPECT_TRUE(hit[y]);
  }
}

TEST(Analysis, GlOrderFormula) {
  for (std::uint64_t n = 1; n <= 4; ++n)
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
      EXPECT_EQ(gl_order(n, q), oracle::gl_product_form(n, q)) << n << "," << q;
  EXPECT_EQ(gl_order(2, 2), 6);
  EXPECT_EQ(gl_order(1, 7), 6);
  EXPECT_EQ(gl_order(3, 2), 168);
  EXPECT_GT(gl_order(20, 1024), boost::multiprecision::cpp_int(1) << 1000);
  EXPECT_THROW(gl_order(2, 6), ConstructionError);
  EXPECT_THROW(gl_order(0, 2), ConstructionError);
}

TEST(Analysis, GlWalkMatchesScan) {
  for (const char* expr : {"M(2, Z(2))", "M(3, Z(2))", "M(2, GF(4))", "M(2, Z(3))", "M(2, GF(8))"}) {
    const auto r = make_ring(expr);
    const auto o = oracle::units(*r);
    const auto t = unit_tally(*r);
    EXPECT_EQ(t.count, o.list.size()) << expr;
    EXPECT_EQ(t.sum, o.sum) << expr;
  }
}

TEST(Analysis, FirstColumnClasses) {
  for (const char* expr : {"M(2, Z(2))", "M(2, GF(4))", "M(3, Z(2))"}) {
    const auto r = make_ring(expr);
    const auto& m = static_cast<const MatrixRing&>(*r);
    const Index q = m.base().order();
    const std::size_t n = m.dim();
    std::map<Index, std::uint64_t> brute;
    for (Index x : oracle::units(m).list) {
      const auto e = m.decode(x);
      Index column = 0, w = 1;
      for (std::size_t i = 0; i < n; ++i, w *= q) column += e[i * n] * w;
      ++brute[column];
    }
    EXPECT_EQ(first_column_classes(m), brute) << expr;
    for (auto [c, size] : brute) EXPECT_EQ(size % 2, 0u);
  }
}

TEST(Analysis, Budgets) {
  Budget tight;
  tight.eager_order = 64;
  tight.stream_order = 128;
  EXPECT_THROW(jacobson_radical(*make_ring("M(2, Z(3))"), tight), ResourceError);
  EXPECT_THROW(unit_group(*make_ring("M(2, GF(4))"), tight), ResourceError);
  EXPECT_THROW(is_boolean(*make_ring("M(3, Z(2))"), tight), ResourceError);
  EXPECT_NO_THROW(jacobson_radical(*make_ring("Z(64)"), tight));
}

TEST(Analysis, StreamedLargeMatrixRing) {
  // 4^9 = 262144 matrices; GL walk visits only the invertible ones.
  const auto r = make_ring("M(3, GF(4))");
  const auto t = unit_tally(*r);
  EXPECT_EQ(t.count, 181440u);
  EXPECT_EQ(t.sum, r->zero());
}
