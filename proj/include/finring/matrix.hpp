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

#ifndef FINRING_MATRIX_HPP_
#define FINRING_MATRIX_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

// Square matrices over a commutative base ring, stored as row-major entry
// vectors of base indices. Shared by the full and the triangular matrix rings.
class MatrixArith {
 public:
  using Entries = std::vector<Index>;

  MatrixArith(std::size_t n, RingPtr base);

  std::size_t dim() const noexcept { return n_; }
  const Ring& base() const noexcept { return *base_; }
  const RingPtr& base_ptr() const noexcept { return base_; }

  Index badd(Index a, Index b) const { return add_.empty() ? base_->add(a, b) : add_[a * bo_ + b]; }
  Index bmul(Index a, Index b) const { return mul_.empty() ? base_->mul(a, b) : mul_[a * bo_ + b]; }
  Index bneg(Index a) const { return neg_.empty() ? base_->neg(a) : neg_[a]; }

  Entries identity() const;
  Entries mul(const Entries& a, const Entries& b) const;

  // Laplace expansion; division free, valid over any commutative base.
  Index determinant(const Entries& a) const;
  Entries adjugate(const Entries& a) const;

  // adj(a) * det(a)^-1 when det(a) is a base unit.
  std::optional<Entries> inverse_by_adjugate(const Entries& a) const;
  // Gauss-Jordan elimination. Requires a field base.
  std::optional<Entries> inverse_by_row_reduction(const Entries& a) const;

 private:
  Index det_rec(const Entries& a, std::size_t n, std::size_t row, std::vector<bool>& used) const;

  std::size_t n_;
  RingPtr base_;
  Index bo_;
  // Copies of the base tables when the base is small.
  std::vector<Index> add_, mul_, neg_;
};

// M_n(base). Element index = sum over row-major positions k of entry_k * |base|^k.
class MatrixRing final : public Ring {
 public:
  MatrixRing(std::size_t n, RingPtr base);

  const MatrixArith& arith() const noexcept { return arith_; }
  std::size_t dim() const noexcept { return arith_.dim(); }
  const Ring& base() const noexcept { return arith_.base(); }

  MatrixArith::Entries decode(Index a) const;
  Index encode(const MatrixArith::Entries& e) const;

  Index add(Index a, Index b) const override;
  Index neg(Index a) const override;
  Index mul(Index a, Index b) const override;
  std::string pretty(Index a) const override;
  std::string name() const override;
  std::vector<Index> additive_generators() const override;
  std::optional<Index> inverse(Index a) const override;
  bool is_field() const override { return dim() == 1 && base().is_field(); }

  // The two invertibility routes, exposed for cross-checking.
  std::optional<Index> inverse_by_determinant(Index a) const;
  std::optional<Index> inverse_by_row_reduction(Index a) const;

 private:
  MatrixArith arith_;
};

// Upper-triangular n x n matrices over base. Element index = sum over the
// positions (i, j), i <= j, in row-major order t of entry * |base|^t.
class TriangularRing final : public Ring {
 public:
  TriangularRing(std::size_t n, RingPtr base);

  const MatrixArith& arith() const noexcept { return arith_; }
  std::size_t dim() const noexcept { return arith_.dim(); }
  const Ring& base() const noexcept { return arith_.base(); }

  // Full row-major entries, zeros below the diagonal.
  MatrixArith::Entries decode(Index a) const;
  Index encode(const MatrixArith::Entries& full) const;

  Index add(Index a, Index b) const override;
  Index neg(Index a) const override;
  Index mul(Index a, Index b) const override;
  std::string pretty(Index a) const override;
  std::string name() const override;
  std::vector<Index> additive_generators() const override;
  std::optional<Index> inverse(Index a) const override;
  bool is_field() const override { return dim() == 1 && base().is_field(); }

 private:
  MatrixArith arith_;
  std::vector<std::size_t> positions_;  // row-major offsets of free entries
};

// Throw ConstructionError for n = 0, a noncommutative base, or an order above kMaxOrder.
std::shared_ptr<const MatrixRing> make_matrix_ring(std::size_t n, RingPtr base);
std::shared_ptr<const TriangularRing> make_triangular_ring(std::size_t n, RingPtr base);

}  // namespace finring

#endif  // FINRING_MATRIX_HPP_
