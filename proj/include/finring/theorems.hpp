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

#ifndef FINRING_THEOREMS_HPP_
#define FINRING_THEOREMS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finring/analysis.hpp"
#include "finring/ring.hpp"

namespace finring {

// One executable check per claim:
//   T1 boolean rings have characteristic 2, commute, and only the unit 1
//   T2 characteristic != 2: no unit equals its negative, units sum to 0
//   T3 characteristic != 2: the unit count is even
//   T4 fields: units sum to 1 for GF(2) and to 0 otherwise; geometric sum of a generator
//   T5 |GL_n(F_q)| formula against brute-force counting
//   T6 characteristic-2 matrix rings, n >= 2: even unit count, zero sum, even first-column classes
//   T7 trivial unit group implies boolean (and characteristic 2, commutative, J = 0)
//   T8 upper-triangular Z_2 matrices: 2^(n(n-1)/2) units summing to E_12 (n = 2) or 0 (n >= 3)
//   T9 R/J(R) has zero radical
enum class CheckId { kT1 = 1, kT2, kT3, kT4, kT5, kT6, kT7, kT8, kT9 };

inline constexpr CheckId kAllChecks[] = {CheckId::kT1, CheckId::kT2, CheckId::kT3,
                                         CheckId::kT4, CheckId::kT5, CheckId::kT6,
                                         CheckId::kT7, CheckId::kT8, CheckId::kT9};

std::string to_string(CheckId id);
// Accepts "T1".."T9" and "main" (= T7).
std::optional<CheckId> parse_check_id(std::string_view text);

struct Counterexample {
  std::string ring;          // ring expression or table-ring name
  std::string table;         // serialized tables for rings without an expression
  std::vector<Index> witness;
  std::string detail;
};

struct TheoremReport {
  CheckId id = CheckId::kT1;
  std::string claim;
  std::string population;
  std::uint64_t population_count = 0;  // instances examined
  std::uint64_t premise_count = 0;     // instances satisfying the hypothesis
  bool passed = true;                  // no violation in what was examined
  bool complete = true;                // the whole declared population was examined
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;
  double elapsed_seconds = 0;
};

struct CheckParams {
  // Enumerated rings of every order 2..max_order join the populations.
  std::uint64_t max_order = 8;
  std::optional<std::uint64_t> node_budget;
  std::uint64_t zn_max = 30;
  std::vector<std::uint64_t> fields{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27};
  // (n, q) pairs for the GL formula; q^(n^2) must stay within the stream cap.
  std::vector<std::pair<std::size_t, std::uint64_t>> gl_pairs{
      {1, 2}, {1, 5}, {1, 7}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 7},
      {2, 8}, {2, 9}, {2, 16}, {3, 2}, {3, 3}, {3, 4}, {4, 2}};
  // Characteristic-2 matrix rings M_n(GF(q)), n >= 2.
  std::vector<std::pair<std::size_t, std::uint64_t>> char2_matrices{
      {2, 2}, {3, 2}, {4, 2}, {2, 4}, {3, 4}, {2, 8}, {2, 16}};
  std::vector<std::size_t> triangular_dims{2, 3, 4};
  Budget budget;
};

TheoremReport run_check(CheckId id, const CheckParams& params = {});
// T1..T9 in order over shared populations.
std::vector<TheoremReport> run_all(const CheckParams& params = {});

// Evaluates one check's claim on one ring. Returns a counterexample when the
// ring satisfies the premise (or require_premise is false) and the claim fails.
std::optional<Counterexample> find_violation(CheckId id, const RingPtr& ring,
                                             bool require_premise = true,
                                             const Budget& budget = {});

// Rebuilds the ring of a counterexample from its expression or tables and
// evaluates the claim again; true when the violation reproduces.
bool recheck(CheckId id, const Counterexample& cx, bool require_premise = true);

// Invertible n x n matrices over GF(q), counted by visiting every matrix and
// row reducing it.
std::uint64_t brute_force_gl_count(std::size_t n, std::uint64_t q);

}  // namespace finring

#endif  // FINRING_THEOREMS_HPP_
