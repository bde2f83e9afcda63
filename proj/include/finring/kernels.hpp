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

#ifndef FINRING_KERNELS_HPP_
#define FINRING_KERNELS_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "finring/matrix.hpp"
#include "finring/ring.hpp"

// Hot loops of the analysis module. Each kernel has a serial reference and an
// OpenMP version; both must return identical results for any thread count.
// threads <= 0 means "OpenMP default".
namespace finring::kernels {

struct UnitScan {
  std::vector<std::uint8_t> is_unit;  // bitmap over all elements
  std::vector<Index> units;           // ascending
  Index sum = 0;
};

UnitScan scan_units_serial(const Ring& r);
UnitScan scan_units_parallel(const Ring& r, int threads);

// Row-major multiplication table of r.
std::vector<std::uint32_t> mul_table_serial(const Ring& r);
std::vector<std::uint32_t> mul_table_parallel(const Ring& r, int threads);

// Members a of the Jacobson radical: one - x*a*y is a unit for all x, y.
// `one_minus[v]` = one - v; `is_unit` is the unit bitmap.
struct RadicalInput {
  std::uint32_t order;
  const std::vector<std::uint32_t>& mul;
  const std::vector<std::uint32_t>& one_minus;
  const std::vector<std::uint8_t>& is_unit;
};
std::vector<Index> radical_serial(const RadicalInput& in);
std::vector<Index> radical_parallel(const RadicalInput& in, int threads);

// Streaming walk over GL_n(F) for a matrix ring over a field: columns are
// chosen one at a time outside the span of the previous ones.
struct GlTally {
  std::uint64_t count = 0;
  Index sum = 0;  // ring index of the sum of all invertible matrices
  // first column (vector index, row i weighted q^i) -> number of matrices
  std::map<Index, std::uint64_t> first_column_classes;
};
GlTally gl_tally_serial(const MatrixRing& m);
GlTally gl_tally_parallel(const MatrixRing& m, int threads);

}  // namespace finring::kernels

#endif  // FINRING_KERNELS_HPP_
