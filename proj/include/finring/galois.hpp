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

#ifndef FINRING_GALOIS_HPP_
#define FINRING_GALOIS_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

// Polynomial over Z_p as coefficients, constant term first.
using Poly = std::vector<std::uint64_t>;

// GF(p^s) parameters. `modulus` is monic of degree s (size s + 1).
struct FieldSpec {
  std::uint64_t p = 0;
  unsigned s = 0;
  std::uint64_t q = 0;
  Poly modulus;
};

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& poly, std::uint64_t p);

// Smallest monic irreducible of degree s over Z_p, comparing the lower
// coefficients (c_0, ..., c_{s-1}) lexicographically with c_0 first.
Poly smallest_irreducible(std::uint64_t p, unsigned s);

// Throws ConstructionError naming the factorization when q is not a prime power.
FieldSpec field_spec(std::uint64_t q);

// GF(q) as Z_p[a]/(modulus). Element encoding is sum c_i p^i.
class GaloisField final : public Ring {
 public:
  explicit GaloisField(FieldSpec spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint64_t characteristic() const noexcept { return spec_.p; }

  Index add(Index a, Index b) const override;
  Index neg(Index a) const override;
  Index mul(Index a, Index b) const override;

  std::string pretty(Index a) const override;
  std::string name() const override { return "GF(" + std::to_string(spec_.q) + ")"; }
  std::vector<Index> additive_generators() const override;
  std::optional<Index> inverse(Index a) const override;
  bool is_field() const override { return true; }

  // Encoding <-> coefficient vector (length s).
  Poly coefficients(Index a) const;
  Index encode(const Poly& coeffs) const;

 private:
  Index poly_mul(Index a, Index b) const;

  FieldSpec spec_;
  // Discrete log tables over a generator, filled for q <= kTableLimit.
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  static constexpr std::uint64_t kTableLimit = 1u << 16;
};

std::shared_ptr<const GaloisField> make_gf(std::uint64_t q);

}  // namespace finring

#endif  // FINRING_GALOIS_HPP_
