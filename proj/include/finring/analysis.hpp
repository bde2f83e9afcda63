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

#ifndef FINRING_ANALYSIS_HPP_
#define FINRING_ANALYSIS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "finring/matrix.hpp"
#include "finring/ring.hpp"
#include "finring/table_ring.hpp"

namespace finring {

// Work limits for the exhaustive scans below. Exceeding one raises
// ResourceError; no operation returns a partial answer.
struct Budget {
  // Largest ring whose multiplication table may be built (radical, quotients).
  Index eager_order = kEagerOrder;
  // Largest ring whose elements may be enumerated (units, booleanness).
  Index stream_order = Index{1} << 20;
  // Unit groups up to this size get an exhaustive closure check.
  std::uint64_t closure_check_limit = 4096;
  // OpenMP threads for the kernels; <= 0 uses the OpenMP default.
  int threads = 0;
};

// Additive order of one.
Index characteristic(const Ring& r);

// Checked on pairs of additive generators, which suffices by bilinearity.
bool is_commutative(const Ring& r);

bool is_boolean(const Ring& r, const Budget& budget = {});

// Two-sided inverse of x, confirming xy = yx = 1.
std::optional<Elem> is_unit(const Ring& r, Elem x);

// Inverse found by scanning every y; independent of Ring::inverse overrides.
std::optional<Index> inverse_by_scan(const Ring& r, Index x);

struct UnitGroupSummary {
  std::vector<Index> units;  // ascending
  std::uint64_t count = 0;
  Index sum = 0;
  bool closure_verified = false;
};

UnitGroupSummary unit_group(const Ring& r, const Budget& budget = {});

// Count and sum of the units without keeping the list. Matrix rings over a
// field stream GL_n column by column; everything else scans elements.
struct UnitTally {
  std::uint64_t count = 0;
  Index sum = 0;
};
UnitTally unit_tally(const Ring& r, const Budget& budget = {});

// Sizes of the classes of GL_n(F) sharing a first column, keyed by that column
// (vector index with row i weighted |F|^i). Field base only.
std::map<Index, std::uint64_t> first_column_classes(const MatrixRing& m,
                                                    const Budget& budget = {});

// |GL_n(F_q)| = prod_{k=1..n} (q^n - q^(n-k)). Throws ConstructionError when
// q is not a prime power or n = 0.
boost::multiprecision::cpp_int gl_order(std::uint64_t n, std::uint64_t q);

struct RadicalSummary {
  std::vector<Index> members;  // ascending
  bool is_zero = false;
};

// J(R) = { a : one - x*a*y is a unit for all x, y }. The result is verified
// to be a two-sided ideal before it is returned.
RadicalSummary jacobson_radical(const Ring& r, const Budget& budget = {});

bool is_semisimple(const Ring& r, const Budget& budget = {});

// Smallest encoding of multiplicative order q - 1 in a field. Throws
// ContractError if r is not GF(q) or Z_p.
Index primitive_element(const Ring& r);

// Multiplicative order of a unit.
std::uint64_t multiplicative_order(const Ring& r, Index x);

}  // namespace finring

#endif  // FINRING_ANALYSIS_HPP_
