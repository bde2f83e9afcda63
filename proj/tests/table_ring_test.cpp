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
#include "finring/modular.hpp"
#include "finring/quotient.hpp"
#include "finring/ring_expr.hpp"
#include "finring/table_ring.hpp"
#include "oracles.hpp"

using namespace finring;

namespace {

TableRingData z_n_tables(std::uint32_t n) { return tabulate(*make_zn(n)); }

std::string axiom_of(const TableRingData& d) {
  try {
    make_table_ring(d);
  } catch (const AxiomError& e) {
    return e.axiom();
  }
  return {};
}

}  // namespace

TEST(TableRing, TabulatePreservesOperations) {
  for (const char* expr : {"Z(6)", "GF(8)", "UT(2, Z(2))", "M(2, Z(2))", "Z(2) x Z(4)"}) {
    const auto r = make_ring(expr);
    const auto t = make_table_ring(tabulate(*r));
    for (Index a = 0; a < r->order(); ++a)
      for (Index b = 0; b < r->order(); ++b) {
        EXPECT_EQ(t->add(a, b), r->add(a, b));
        EXPECT_EQ(t->mul(a, b), r->mul(a, b));
      }
    EXPECT_EQ(t->one(), r->one());
  }
}

TEST(TableRing, AdditiveType) {
  EXPECT_EQ(tabulate(*make_ring("Z(4)")).additive_type, (std::vector<std::uint64_t>{4}));
  EXPECT_EQ(tabulate(*make_ring("GF(4)")).additive_type, (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(tabulate(*make_ring("Z(6)")).additive_type, (std::vector<std::uint64_t>{6}));
  EXPECT_EQ(tabulate(*make_ring("Z(2) x Z(4)")).additive_type, (std::vector<std::uint64_t>{4, 2}));
  EXPECT_EQ(tabulate(*make_ring("M(2, Z(2))")).additive_type, (std::vector<std::uint64_t>{2, 2, 2, 2}));
}

TEST(TableRing, RejectsEachBrokenAxiom) {
  auto d = z_n_tables(4);
  d.mul_table[1 * 4 + 1] = 2;  // 1 * 1 = 2
  EXPECT_NE(axiom_of(d), "");

  d = z_n_tables(4);
  d.add_table[1 * 4 + 2] = 0;
  EXPECT_NE(axiom_of(d), "");

  d = z_n_tables(3);
  d.one = 2;
  EXPECT_EQ(axiom_of(d).rfind("declared one is not the unity", 0), 0u);

  // x*y = 0 for all: associative and distributive but no unity.
  d = z_n_tables(3);
  std::fill(d.mul_table.begin(), d.mul_table.end(), 0);
  EXPECT_EQ(axiom_of(d), "no unity");

  d = z_n_tables(2);
  d.add_table = {0, 1, 1, 1};
  EXPECT_NE(axiom_of(d), "");

  d = z_n_tables(4);
  d.additive_type = {2, 2};
  EXPECT_THROW(make_table_ring(d), ConstructionError);

  d = z_n_tables(4);
  d.mul_table.pop_back();
  EXPECT_THROW(make_table_ring(d), ConstructionError);
}

TEST(TableRing, AxiomErrorCarriesWitness) {
  auto d = z_n_tables(5);
  d.mul_table[2 * 5 + 3] = 0;
  try {
    make_table_ring(d);
    FAIL();
  } catch (const AxiomError& e) {
    EXPECT_FALSE(e.witness().empty());
    EXPECT_NE(std::string(e.what()).find("ring axiom violated"), std::string::npos);
  }
}

TEST(TableRing, SerializeRoundTrip) {
  for (const char* expr : {"Z(1)", "Z(2)", "GF(9)", "UT(2, Z(2))", "Z(3) x Z(3)"}) {
    const auto d = tabulate(*make_ring(expr));
    const auto text = serialize(d);
    EXPECT_EQ(parse_table_ring(text), d) << expr;
    EXPECT_EQ(serialize(parse_table_ring(text)), text);
  }
  const auto both = serialize(z_n_tables(2)) + serialize(z_n_tables(3));
  const auto parsed = parse_table_rings(both);
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[1], z_n_tables(3));
}

TEST(TableRing, SerializedHeader) {
  const auto text = serialize(z_n_tables(2));
  EXPECT_EQ(text, "2 0 1 2\n0 1\n1 0\n0 0\n0 1\n");
  EXPECT_THROW(parse_table_ring("2 0 1 2\n0 1\n"), Error);
  EXPECT_THROW(parse_table_ring("x"), Error);
}

TEST(TableRing, TabulateCap) {
  EXPECT_THROW(tabulate(*make_ring("GF(8192)")), ResourceError);
  EXPECT_NO_THROW(tabulate(*make_ring("GF(4096)")));
}

TEST(Quotient, ZnModIdeal) {
  const RingPtr z12 = make_zn(12);
  const auto q = quotient_ring(z12, {0, 4, 8});
  EXPECT_EQ(q->order(), 4u);
  EXPECT_EQ(oracle::axiom_failure(*q), "");
  EXPECT_EQ(oracle::characteristic(*q), 4u);
  EXPECT_EQ(q->kind(), RingKind::kQuotient);
  EXPECT_EQ(q->pretty(1), "1+I");
}

TEST(Quotient, RejectsNonIdeals) {
  const RingPtr z12 = make_zn(12);
  EXPECT_THROW(verify_ideal(*z12, {0, 5}), AxiomError);
  EXPECT_THROW(quotient_ring(z12, {0, 3}), AxiomError);  // not closed under addition
  const RingPtr m = make_ring("M(2, Z(2))");
  const auto& mr = static_cast<const MatrixRing&>(*m);
  // Matrices with zero second row form a right ideal only.
  std::vector<Index> rows;
  for (Index x = 0; x < m->order(); ++x) {
    const auto e = mr.decode(x);
    if (e[2] == 0 && e[3] == 0) rows.push_back(x);
  }
  EXPECT_THROW(verify_ideal(*m, rows), AxiomError);
}

TEST(Quotient, ByRadicalIsSemisimpleForSmallRings) {
  for (const char* expr : {"Z(8)", "Z(12)", "UT(2, Z(2))", "UT(3, Z(2))", "Z(4) x Z(9)", "UT(2, GF(4))"}) {
    const RingPtr r = make_ring(expr);
    const auto j = oracle::radical(*r);
    const auto q = quotient_ring(r, j);
    EXPECT_EQ(q->order() * j.size(), r->order());
    EXPECT_EQ(oracle::radical(*q), std::vector<Index>{0}) << expr;
  }
}
