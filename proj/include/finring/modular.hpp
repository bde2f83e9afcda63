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

#ifndef FINRING_MODULAR_HPP_
#define FINRING_MODULAR_HPP_

#include <memory>

#include "finring/ring.hpp"

namespace finring {

// Z_n. Element i is the residue i.
class ModularRing final : public Ring {
 public:
  explicit ModularRing(Index n);

  Index modulus() const noexcept { return order(); }

  Index add(Index a, Index b) const override {
    Index s = a + b;
    return s >= order() ? s - order() : s;
  }
  Index neg(Index a) const override { return a == 0 ? 0 : order() - a; }
  Index mul(Index a, Index b) const override { return (a * b) % order(); }

  std::string pretty(Index a) const override { return std::to_string(a); }
  std::string name() const override { return "Z(" + std::to_string(order()) + ")"; }
  std::vector<Index> additive_generators() const override;
  std::optional<Index> inverse(Index a) const override;
  bool is_field() const override { return prime_; }

 private:
  bool prime_;
};

// Throws ConstructionError for n = 0 or n above kMaxOrder. n = 1 is the zero ring.
std::shared_ptr<const ModularRing> make_zn(Index n);

}  // namespace finring

#endif  // FINRING_MODULAR_HPP_
