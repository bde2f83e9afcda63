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

#ifndef FINRING_RING_HPP_
#define FINRING_RING_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finring/error.hpp"

namespace finring {

// Canonical index of an element inside one specific ring. 0 is always zero.
using Index = std::uint64_t;

enum class RingKind { kModular, kField, kMatrix, kTriangular, kProduct, kTable, kQuotient };

std::string_view to_string(RingKind kind);

// Hard ceiling on the number of elements any constructor accepts. Indices and
// table entries fit in 32 bits below it.
inline constexpr Index kMaxOrder = Index{1} << 32;

class Ring;

// An element bound to its ring. Does not own the ring; arithmetic between
// elements of different rings throws ContractError.
struct Elem {
  const Ring* ring = nullptr;
  Index index = 0;

  friend bool operator==(const Elem&, const Elem&) = default;
};

Elem operator+(Elem a, Elem b);
Elem operator-(Elem a, Elem b);
Elem operator-(Elem a);
Elem operator*(Elem a, Elem b);

// A finite unital ring with elements 0..order-1 and total arithmetic.
//
// Implementations are immutable after construction, so a ring may be shared
// freely across threads. Arithmetic entry points do not range-check their
// arguments; use check() or elem() at API boundaries.
class Ring {
 public:
  virtual ~Ring() = default;
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  Index order() const noexcept { return order_; }
  RingKind kind() const noexcept { return kind_; }
  Index zero() const noexcept { return 0; }
  Index one() const noexcept { return one_; }

  virtual Index add(Index a, Index b) const = 0;
  virtual Index neg(Index a) const = 0;
  virtual Index mul(Index a, Index b) const = 0;
  Index sub(Index a, Index b) const { return add(a, neg(b)); }

  virtual std::string pretty(Index a) const = 0;

  // Ring-expression style description, e.g. "M(2, GF(4))".
  virtual std::string name() const = 0;

  // Elements generating (R, +). Bilinear properties such as commutativity
  // only need checking on pairs of these. Default: every nonzero element.
  virtual std::vector<Index> additive_generators() const;

  // Two-sided inverse if `a` is a unit. The default scans all y for xy = 1
  // and then confirms yx = 1.
  virtual std::optional<Index> inverse(Index a) const;

  // True when every nonzero element is a unit and mul is commutative.
  virtual bool is_field() const { return false; }

  void check(Index a) const;
  Elem elem(Index a) const;
  void check(const Elem& e) const;

 protected:
  Ring(RingKind kind, Index order, Index one);

 private:
  RingKind kind_;
  Index order_;
  Index one_;
};

using RingPtr = std::shared_ptr<const Ring>;

}  // namespace finring

#endif  // FINRING_RING_HPP_
