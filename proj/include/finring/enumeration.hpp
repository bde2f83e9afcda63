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

#ifndef FINRING_ENUMERATION_HPP_
#define FINRING_ENUMERATION_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finring/ring.hpp"
#include "finring/table_ring.hpp"

namespace finring {

// Largest order the enumerator and the canonicalizer accept.
inline constexpr std::uint64_t kMaxEnumerationOrder = 16;
// Orders above this are best effort and need an explicit node budget.
inline constexpr std::uint64_t kMandatoryEnumerationOrder = 8;

// Z_{d_0} x ... x Z_{d_{k-1}} with d_0 >= d_1 >= ..., d_{i+1} | d_i. The
// standard encoding of (a_0, ..., a_{k-1}) is sum a_i * (d_0 * ... * d_{i-1}).
struct AdditiveGroupShape {
  std::vector<std::uint64_t> invariant_factors;
  std::vector<Index> generators;  // standard indices of the basis vectors
  std::uint64_t automorphism_count = 0;

  std::uint64_t order() const;
  friend bool operator==(const AdditiveGroupShape&, const AdditiveGroupShape&) = default;
};

// All abelian groups of the given order up to isomorphism: fewest factors
// first, then lexicographically descending.
std::vector<AdditiveGroupShape> abelian_group_shapes(std::uint64_t order);

// |Aut(G)| from the invariant factors (closed form over the primary parts).
std::uint64_t automorphism_count(const std::vector<std::uint64_t>& invariant_factors);

// Isomorphism invariant of a ring of order <= kMaxEnumerationOrder: the
// lexicographically least structure-constant vector over every additive
// basis, plus the unity in that basis. `tables()` expands it into the
// canonical (add_table, mul_table, one) triple in the standard encoding.
struct CanonicalForm {
  std::vector<std::uint64_t> additive_type;
  std::vector<std::uint32_t> constants;  // c_ij = e_i * e_j, row-major, standard indices
  std::uint32_t one = 0;

  TableRingData tables() const;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const TableRingData& r);

// Invariant fast path (order, additive type, characteristic, unit count,
// booleanness, commutativity, radical size), then canonical forms.
bool are_isomorphic(const TableRingData& a, const TableRingData& b);
bool are_isomorphic(const Ring& a, const Ring& b);

enum class SearchOrder {
  kForward,  // constants placed row-major, values ascending
  kReverse,  // constants placed in reverse row-major order, values descending
};

struct EnumerationOptions {
  bool up_to_iso = false;
  SearchOrder search = SearchOrder::kForward;
  int threads = 0;
  // Search-node budget. Orders above kMandatoryEnumerationOrder stop before
  // the first unit of work when no budget is given.
  std::optional<std::uint64_t> node_budget;
  // Resume token from a previous incomplete run.
  std::string resume_token;
};

struct EnumerationResult {
  // Validated unital rings. Raw mode: every structure on the standard
  // additive groups, sorted by (shape, constants). Up-to-iso mode: one
  // canonical table per class, sorted by canonical form.
  std::vector<TableRingData> rings;
  std::vector<std::size_t> shape_of;  // index into abelian_group_shapes(order)
  bool complete = true;
  std::string resume_token;  // set when incomplete
  std::uint64_t nodes = 0;
  std::size_t units_done = 0;
  std::size_t units_total = 0;
};

EnumerationResult enumerate_unital_rings(std::uint64_t order, const EnumerationOptions& options = {});

}  // namespace finring

#endif  // FINRING_ENUMERATION_HPP_
