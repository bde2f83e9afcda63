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

#ifndef FINRING_PRODUCT_HPP_
#define FINRING_PRODUCT_HPP_

#include <memory>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

// Componentwise product R_0 x ... x R_{k-1}. Element index is the mixed-radix
// encoding sum c_i * (|R_0| * ... * |R_{i-1}|), first factor least significant.
class ProductRing final : public Ring {
 public:
  explicit ProductRing(std::vector<RingPtr> factors);

  const std::vector<RingPtr>& factors() const noexcept { return factors_; }

  std::vector<Index> decode(Index a) const;
  Index encode(const std::vector<Index>& components) const;

  Index add(Index a, Index b) const override;
  Index neg(Index a) const override;
  Index mul(Index a, Index b) const override;
  std::string pretty(Index a) const override;
  std::string name() const override;
  std::vector<Index> additive_generators() const override;
  std::optional<Index> inverse(Index a) const override;
  bool is_field() const override { return factors_.size() == 1 && factors_[0]->is_field(); }

 private:
  std::vector<RingPtr> factors_;
  std::vector<Index> weights_;
};

// Throws ConstructionError on an empty list or a total order above kMaxOrder.
std::shared_ptr<const ProductRing> make_product(std::vector<RingPtr> factors);

}  // namespace finring

#endif  // FINRING_PRODUCT_HPP_
