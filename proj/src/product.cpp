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

#include "finring/product.hpp"

namespace finring {

namespace {

Index product_order(const std::vector<RingPtr>& factors) {
  if (factors.empty()) throw ConstructionError("product of an empty list of rings");
  Index order = 1;
  for (const auto& f : factors) {
    if (!f) throw ConstructionError("null factor in product");
    if (order > kMaxOrder / f->order()) {
      throw ConstructionError("product order exceeds the order cap " + std::to_string(kMaxOrder));
    }
    order *= f->order();
  }
  return order;
}

Index product_one(const std::vector<RingPtr>& factors) {
  Index one = 0, w = 1;
  for (const auto& f : factors) {
    one += f->one() * w;
    w *= f->order();
  }
  return one;
}

}  // namespace

ProductRing::ProductRing(std::vector<RingPtr> factors)
    : Ring(RingKind::kProduct, product_order(factors), product_one(factors)),
      factors_(std::move(factors)) {
  Index w = 1;
  for (const auto& f : factors_) {
    weights_.push_back(w);
    w *= f->order();
  }
}

std::vector<Index> ProductRing::decode(Index a) const {
  std::vector<Index> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    c[i] = a % factors_[i]->order();
    a /= factors_[i]->order();
  }
  return c;
}

Index ProductRing::encode(const std::vector<Index>& components) const {
  Index a = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) a += components[i] * weights_[i];
  return a;
}

Index ProductRing::add(Index a, Index b) const {
  Index out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Index o = factors_[i]->order();
    out += factors_[i]->add(a % o, b % o) * weights_[i];
    a /= o;
    b /= o;
  }
  return out;
}

Index ProductRing::neg(Index a) const {
  Index out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Index o = factors_[i]->order();
    out += factors_[i]->neg(a % o) * weights_[i];
    a /= o;
  }
  return out;
}

Index ProductRing::mul(Index a, Index b) const {
  Index out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Index o = factors_[i]->order();
    out += factors_[i]->mul(a % o, b % o) * weights_[i];
    a /= o;
    b /= o;
  }
  return out;
}

std::string ProductRing::pretty(Index a) const {
  const auto c = decode(a);
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += factors_[i]->pretty(c[i]);
  }
  return out + ")";
}

std::string ProductRing::name() const {
  if (factors_.size() == 1) return "Prod(" + factors_[0]->name() + ")";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " x ";
    const bool nested = factors_[i]->kind() == RingKind::kProduct &&
                        static_cast<const ProductRing&>(*factors_[i]).factors().size() > 1;
    out += nested ? "(" + factors_[i]->name() + ")" : factors_[i]->name();
  }
  return out;
}

std::vector<Index> ProductRing::additive_generators() const {
  std::vector<Index> gens;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (Index g : factors_[i]->additive_generators()) gens.push_back(g * weights_[i]);
  }
  return gens;
}

std::optional<Index> ProductRing::inverse(Index a) const {
  Index out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Index o = factors_[i]->order();
    auto inv = factors_[i]->inverse(a % o);
    if (!inv) return std::nullopt;
    out += *inv * weights_[i];
    a /= o;
  }
  return out;
}

std::shared_ptr<const ProductRing> make_product(std::vector<RingPtr> factors) {
  return std::make_shared<ProductRing>(std::move(factors));
}

}  // namespace finring
