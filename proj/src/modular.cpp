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

#include "finring/modular.hpp"

#include "finring/number_theory.hpp"

namespace finring {

namespace {

Index checked_modulus(Index n) {
  if (n == 0) throw ConstructionError("Z(n) requires n >= 1");
  if (n > kMaxOrder) {
    throw ConstructionError("Z(" + std::to_string(n) + ") exceeds the order cap " +
                            std::to_string(kMaxOrder));
  }
  return n;
}

}  // namespace

ModularRing::ModularRing(Index n)
    : Ring(RingKind::kModular, checked_modulus(n), n == 1 ? 0 : 1), prime_(is_prime(n)) {}

std::vector<Index> ModularRing::additive_generators() const {
  if (order() == 1) return {};
  return {1};
}

std::optional<Index> ModularRing::inverse(Index a) const { return mod_inverse(a, order()); }

std::shared_ptr<const ModularRing> make_zn(Index n) { return std::make_shared<ModularRing>(n); }

}  // namespace finring
