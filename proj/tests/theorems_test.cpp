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
#include "finring/theorems.hpp"

using namespace finring;

namespace {

CheckParams small_params() {
  CheckParams p;
  p.max_order = 4;
  return p;
}

}  // namespace

TEST(Theorems, ParseIds) {
  EXPECT_EQ(parse_check_id("T1"), CheckId::kT1);
  EXPECT_EQ(parse_check_id("T9"), CheckId::kT9);
  EXPECT_EQ(parse_check_id("main"), CheckId::kT7);
  EXPECT_FALSE(parse_check_id("T0"));
  EXPECT_FALSE(parse_check_id("T10"));
  EXPECT_FALSE(parse_check_id(""));
  EXPECT_EQ(to_string(CheckId::kT4), "T4");
}

TEST(Theorems, AllPassOnSmallPopulation) {
  const auto reports = run_all(small_params());
  ASSERT_EQ(reports.size(), 9u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed) << to_string(r.id);
    EXPECT_TRUE(r.complete) << to_string(r.id);
    EXPECT_FALSE(r.counterexample) << to_string(r.id);
    EXPECT_GT(r.premise_count, 0u) << to_string(r.id);
    EXPECT_LE(r.premise_count, r.population_count);
  }
}

TEST(Theorems, MainCheckAtOrderEight) {
  const auto r = run_check(CheckId::kT7);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.complete);
  // Eight structured rings with one unit (B(1..6), Z(2), UT(1, Z(2))), the
  // labeled copies of F_2^k (|GL_k(F_2)| / k! of them) and one class per k.
  EXPECT_EQ(r.premise_count, 8u + (1 + 6 / 2 + 168 / 6) + 3);
}

TEST(Theorems, ZeroRingExcluded) {
  CheckParams p;
  p.max_order = 1;
  const auto r = run_check(CheckId::kT7, p);
  EXPECT_TRUE(r.passed);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.front().find("empty"), std::string::npos);
  EXPECT_FALSE(find_violation(CheckId::kT1, make_ring("Z(1)"), false));
}

TEST(Theorems, IncompleteWithoutBudget) {
  CheckParams p;
  p.max_order = 9;
  const auto r = run_check(CheckId::kT7, p);
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.complete);
}

TEST(Theorems, PremiseFilters) {
  // Z(2) has one unit (odd); T3 requires characteristic != 2.
  EXPECT_FALSE(find_violation(CheckId::kT3, make_ring("Z(2)")));
  const auto cx = find_violation(CheckId::kT3, make_ring("Z(2)"), false);
  ASSERT_TRUE(cx);
  EXPECT_EQ(cx->ring, "Z(2)");
  EXPECT_TRUE(recheck(CheckId::kT3, *cx, false));
  EXPECT_FALSE(recheck(CheckId::kT3, *cx, true));

  // Claim of T1 fails on Z(3) once the boolean premise is dropped.
  const auto t1 = find_violation(CheckId::kT1, make_ring("Z(3)"), false);
  ASSERT_TRUE(t1);
  EXPECT_NE(t1->detail.find("characteristic"), std::string::npos);

  // UT_2(Z_2) is not in the premise of T7 (two units) and is not boolean.
  EXPECT_FALSE(find_violation(CheckId::kT7, make_ring("UT(2, Z(2))")));
  EXPECT_TRUE(find_violation(CheckId::kT7, make_ring("UT(2, Z(2))"), false));

  // Z(2) sums its units to 1: T2's claim fails without the premise.
  EXPECT_TRUE(find_violation(CheckId::kT2, make_ring("Z(2)"), false));
  // GL_1(F_2) has one element.
  EXPECT_TRUE(find_violation(CheckId::kT6, make_ring("M(1, Z(2))"), false));
  EXPECT_FALSE(find_violation(CheckId::kT6, make_ring("M(1, Z(2))")));
  EXPECT_TRUE(find_violation(CheckId::kT8, make_ring("UT(2, Z(3))"), false));
}

TEST(Theorems, TableCounterexampleRechecks) {
  // Z(4) as a table ring fails the T1 claim once the premise is dropped.
  const auto table = make_table_ring(tabulate(*make_ring("Z(4)")));
  const auto cx = find_violation(CheckId::kT1, table, false);
  ASSERT_TRUE(cx);
  EXPECT_FALSE(cx->table.empty());
  EXPECT_TRUE(recheck(CheckId::kT1, *cx, false));
}

TEST(Theorems, HoldOnFamilies) {
  for (const char* expr : {"B(1)", "B(6)", "Z(2) x Z(2)", "GF(2)"}) EXPECT_FALSE(find_violation(CheckId::kT1, make_ring(expr)));
  for (const char* expr : {"Z(9)", "Z(15)", "M(2, Z(3))", "GF(25)", "UT(2, Z(3))"}) {
    EXPECT_FALSE(find_violation(CheckId::kT2, make_ring(expr))) << expr;
    EXPECT_FALSE(find_violation(CheckId::kT3, make_ring(expr))) << expr;
  }
  for (const char* expr : {"M(2, Z(2))", "M(3, Z(2))", "M(2, GF(4))"}) {
    EXPECT_FALSE(find_violation(CheckId::kT6, make_ring(expr), false)) << expr;
    EXPECT_FALSE(find_violation(CheckId::kT5, make_ring(expr), false)) << expr;
  }
  for (const char* expr : {"UT(1, Z(2))", "UT(2, Z(2))", "UT(3, Z(2))", "UT(4, Z(2))", "UT(3, GF(2))"})
    EXPECT_FALSE(find_violation(CheckId::kT8, make_ring(expr), false)) << expr;
  for (const char* expr : {"Z(8)", "UT(3, Z(2))", "M(2, Z(4))", "Z(4) x UT(2, Z(2))"})
    EXPECT_FALSE(find_violation(CheckId::kT9, make_ring(expr), false)) << expr;
}

TEST(Theorems, BruteForceGlCounts) {
  EXPECT_EQ(brute_force_gl_count(1, 5), 4u);
  EXPECT_EQ(brute_force_gl_count(2, 2), 6u);
  EXPECT_EQ(brute_force_gl_count(2, 3), 48u);
  EXPECT_EQ(brute_force_gl_count(2, 4), 180u);
  EXPECT_EQ(brute_force_gl_count(3, 2), 168u);
  EXPECT_THROW(brute_force_gl_count(3, 8), ResourceError);
}

TEST(Theorems, GlTableInNotes) {
  CheckParams p;
  p.gl_pairs = {{2, 2}, {3, 2}};
  const auto r = run_check(CheckId::kT5, p);
  EXPECT_TRUE(r.passed);
  ASSERT_EQ(r.notes.size(), 2u);
  EXPECT_EQ(r.notes[1], "n=3 q=2: formula 168, brute force 168");
}
