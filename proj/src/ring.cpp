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

#include "finring/ring.hpp"

#include <stdexcept>

namespace finring {

std::string_view to_string(RingKind kind) {
  switch (kind) {
    case RingKind::kModular: return "modular";
    case RingKind::kField: return "field";
    case RingKind::kMatrix: return "matrix";
    case RingKind::kTriangular: return "triangular";
    case RingKind::kProduct: return "product";
    case RingKind::kTable: return "table";
    case RingKind::kQuotient: return "quotient";
  }
  return "unknown";
}

Ring::Ring(RingKind kind, Index order, Index one) : kind_(kind), order_(order), one_(one) {
  if (order == 0) throw ConstructionError("ring order must be positive");
  if (order > kMaxOrder) {
    throw ConstructionError("ring order " + std::to_string(order) + " exceeds the order cap " +
                            std::to_string(kMaxOrder));
  }
}

std::vector<Index> Ring::additive_generators() const {
  std::vector<Index> gens;
  gens.reserve(order_ > 0 ? order_ - 1 : 0);
  for (Index x = 1; x < order_; ++x) gens.push_back(x);
  return gens;
}

std::optional<Index> Ring::inverse(Index a) const {
  for (Index y = 0; y < order_; ++y) {
    if (mul(a, y) != one_) continue;
    // In a finite ring a one-sided inverse is two-sided.
    if (mul(y, a) != one_) throw std::logic_error("one-sided inverse in " + name());
    return y;
  }
  return std::nullopt;
}

void Ring::check(Index a) const {
  if (a >= order_) {
    throw ContractError("element index " + std::to_string(a) + " out of range for " + name() +
                        " of order " + std::to_string(order_));
  }
}

Elem Ring::elem(Index a) const {
  check(a);
  return Elem{this, a};
}

void Ring::check(const Elem& e) const {
  if (e.ring != this) throw ContractError("element does not belong to " + name());
  check(e.index);
}

namespace {

const Ring& common_ring(const Elem& a, const Elem& b) {
  if (a.ring == nullptr || b.ring == nullptr) throw ContractError("unbound element");
  if (a.ring != b.ring) {
    throw ContractError("arithmetic between elements of " + a.ring->name() + " and " +
                        b.ring->name());
  }
  return *a.ring;
}

}  // namespace

Elem operator+(Elem a, Elem b) {
  const Ring& r = common_ring(a, b);
  return {&r, r.add(a.index, b.index)};
}

Elem operator-(Elem a, Elem b) {
  const Ring& r = common_ring(a, b);
  return {&r, r.sub(a.index, b.index)};
}

Elem operator-(Elem a) {
  if (a.ring == nullptr) throw ContractError("unbound element");
  return {a.ring, a.ring->neg(a.index)};
}

Elem operator*(Elem a, Elem b) {
  const Ring& r = common_ring(a, b);
  return {&r, r.mul(a.index, b.index)};
}

}  // namespace finring
