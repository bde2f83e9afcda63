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

#ifndef FINRING_TABLE_RING_HPP_
#define FINRING_TABLE_RING_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

// Largest order for which full arithmetic tables are ever materialized.
inline constexpr Index kEagerOrder = 4096;

// Raw tables of a finite ring. Tables are row-major order x order.
struct TableRingData {
  std::uint32_t order = 0;
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> mul_table;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  // Invariant factors of (R, +), descending, each dividing the previous.
  // Empty means "compute it" when passed to make_table_ring.
  std::vector<std::uint64_t> additive_type;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_table[a * order + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_table[a * order + b]; }

  friend bool operator==(const TableRingData&, const TableRingData&) = default;
};

// Invariant factors of the abelian group given by an addition table.
std::vector<std::uint64_t> additive_type_of(std::uint32_t order,
                                            const std::vector<std::uint32_t>& add_table,
                                            std::uint32_t zero);

// Ring backed by validated tables; also the carrier of quotient rings.
class TableRing final : public Ring {
 public:
  const TableRingData& data() const noexcept { return data_; }
  const std::vector<std::uint64_t>& additive_type() const noexcept { return data_.additive_type; }

  Index add(Index a, Index b) const override { return data_.add_table[a * order() + b]; }
  Index neg(Index a) const override { return neg_[a]; }
  Index mul(Index a, Index b) const override { return data_.mul_table[a * order() + b]; }
  std::string pretty(Index a) const override;
  std::string name() const override { return name_; }

  // Skips validation. Only for tables produced by trusted constructions.
  static std::shared_ptr<const TableRing> trusted(TableRingData data, RingKind kind,
                                                  std::string name,
                                                  std::vector<std::string> labels = {});

 private:
  TableRing(TableRingData data, RingKind kind, std::string name, std::vector<std::string> labels);

  TableRingData data_;
  std::vector<std::uint32_t> neg_;
  std::string name_;
  std::vector<std::string> labels_;
};

// Checks every unital-ring axiom exhaustively. Throws AxiomError naming the
// first violated axiom with a witness, or ConstructionError for malformed input.
std::shared_ptr<const TableRing> make_table_ring(TableRingData data);

// Full tables of any ring of order <= kEagerOrder; ResourceError above it.
TableRingData tabulate(const Ring& ring);

// Text format: header "order zero one t1,t2,..", then order rows of the
// addition table and order rows of the multiplication table, entries
// separated by single spaces, every line terminated by '\n'.
std::string serialize(const TableRingData& data);
TableRingData parse_table_ring(std::string_view text);
// Concatenated blocks as written by serialize() for several rings.
std::vector<TableRingData> parse_table_rings(std::string_view text);

}  // namespace finring

#endif  // FINRING_TABLE_RING_HPP_
