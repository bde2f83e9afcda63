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

#include "finring/matrix.hpp"

#include <sstream>

#include "finring/number_theory.hpp"

namespace finring {

namespace {

constexpr Index kBaseTableLimit = 256;
constexpr std::size_t kMaxDim = 32;

bool base_commutes(const Ring& base) {
  const auto gens = base.additive_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (base.mul(gens[i], gens[j]) != base.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

std::size_t free_entries(std::size_t n, bool triangular) {
  return triangular ? n * (n + 1) / 2 : n * n;
}

const char* family(bool triangular) { return triangular ? "UT" : "M"; }

Index checked_order(std::size_t n, const RingPtr& base, bool triangular) {
  if (!base) throw ConstructionError("matrix ring over a null base");
  if (n == 0) throw ConstructionError(std::string(family(triangular)) + "(n, R) requires n >= 1");
  if (n > kMaxDim) {
    throw ConstructionError(std::string(family(triangular)) + "(" + std::to_string(n) +
                            ", R): dimension above " + std::to_string(kMaxDim));
  }
  if (!base_commutes(*base)) {
    throw ConstructionError(std::string(family(triangular)) + "(" + std::to_string(n) + ", " +
                            base->name() + "): base ring is not commutative");
  }
  const auto order = checked_pow(base->order(), static_cast<unsigned>(free_entries(n, triangular)),
                                 kMaxOrder);
  if (!order) {
    throw ConstructionError(std::string(family(triangular)) + "(" + std::to_string(n) + ", " +
                            base->name() + ") exceeds the order cap " + std::to_string(kMaxOrder));
  }
  return *order;
}

// Index of the identity matrix; diagonal slot positions depend on the layout.
// Validates before reading base; constructor arguments have no evaluation order.
Index identity_index(std::size_t n, const RingPtr& base_ptr, bool triangular) {
  checked_order(n, base_ptr, triangular);
  const Ring& base = *base_ptr;
  Index idx = 0, w = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = triangular ? i : 0; j < n; ++j) {
      if (i == j) idx += base.one() * w;
      w *= base.order();
    }
  }
  return idx;
}

std::string render(const MatrixArith::Entries& e, std::size_t n, const Ring& base) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < n; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n; ++j) out << (j ? "," : "") << base.pretty(e[i * n + j]);
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace

MatrixArith::MatrixArith(std::size_t n, RingPtr base)
    : n_(n), base_(std::move(base)), bo_(base_->order()) {
  if (bo_ > kBaseTableLimit) return;
  add_.resize(bo_ * bo_);
  mul_.resize(bo_ * bo_);
  neg_.resize(bo_);
  for (Index a = 0; a < bo_; ++a) {
    neg_[a] = base_->neg(a);
    for (Index b = 0; b < bo_; ++b) {
      add_[a * bo_ + b] = base_->add(a, b);
      mul_[a * bo_ + b] = base_->mul(a, b);
    }
  }
}

MatrixArith::Entries MatrixArith::identity() const {
  Entries e(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) e[i * n_ + i] = base_->one();
  return e;
}

MatrixArith::Entries MatrixArith::mul(const Entries& a, const Entries& b) const {
  Entries c(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Index aik = a[i * n_ + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        c[i * n_ + j] = badd(c[i * n_ + j], bmul(aik, b[k * n_ + j]));
      }
    }
  }
  return c;
}

Index MatrixArith::det_rec(const Entries& a, std::size_t n, std::size_t row,
                           std::vector<bool>& used) const {
  if (row == n) return base_->one();
  Index acc = 0;
  bool negative = false;
  for (std::size_t col = 0; col < n; ++col) {
    if (used[col]) continue;
    const Index entry = a[row * n + col];
    if (entry != 0) {
      used[col] = true;
      const Index minor = det_rec(a, n, row + 1, used);
      used[col] = false;
      const Index term = bmul(entry, minor);
      acc = badd(acc, negative ? bneg(term) : term);
    }
    negative = !negative;
  }
  return acc;
}

Index MatrixArith::determinant(const Entries& a) const {
  std::vector<bool> used(n_, false);
  return det_rec(a, n_, 0, used);
}

MatrixArith::Entries MatrixArith::adjugate(const Entries& a) const {
  Entries adj(n_ * n_, 0);
  if (n_ == 1) {
    adj[0] = base_->one();
    return adj;
  }
  const std::size_t m = n_ - 1;
  Entries minor(m * m);
  std::vector<bool> used(m, false);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      std::size_t t = 0;
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0; c < n_; ++c) {
          if (c != j) minor[t++] = a[r * n_ + c];
        }
      }
      const Index d = det_rec(minor, m, 0, used);
      // adj = transpose of the cofactor matrix
      adj[j * n_ + i] = ((i + j) % 2 == 0) ? d : bneg(d);
    }
  }
  return adj;
}

std::optional<MatrixArith::Entries> MatrixArith::inverse_by_adjugate(const Entries& a) const {
  const auto det_inv = base_->inverse(determinant(a));
  if (!det_inv) return std::nullopt;
  Entries adj = adjugate(a);
  for (auto& x : adj) x = bmul(x, *det_inv);
  return adj;
}

std::optional<MatrixArith::Entries> MatrixArith::inverse_by_row_reduction(const Entries& a) const {
  if (!base_->is_field()) throw ContractError("row reduction needs a field base, got " + base_->name());
  Entries m = a, inv = identity();
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m[pivot * n_ + col] == 0) ++pivot;
    if (pivot == n_) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(m[pivot * n_ + j], m[col * n_ + j]);
        std::swap(inv[pivot * n_ + j], inv[col * n_ + j]);
      }
    }
    const Index scale = *base_->inverse(m[col * n_ + col]);
    for (std::size_t j = 0; j < n_; ++j) {
      m[col * n_ + j] = bmul(m[col * n_ + j], scale);
      inv[col * n_ + j] = bmul(inv[col * n_ + j], scale);
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col) continue;
      const Index f = m[r * n_ + col];
      if (f == 0) continue;
      const Index nf = bneg(f);
      for (std::size_t j = 0; j < n_; ++j) {
        m[r * n_ + j] = badd(m[r * n_ + j], bmul(nf, m[col * n_ + j]));
        inv[r * n_ + j] = badd(inv[r * n_ + j], bmul(nf, inv[col * n_ + j]));
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------

MatrixRing::MatrixRing(std::size_t n, RingPtr base)
    : Ring(RingKind::kMatrix, checked_order(n, base, false), identity_index(n, base, false)),
      arith_(n, std::move(base)) {}

MatrixArith::Entries MatrixRing::decode(Index a) const {
  const Index b = base().order();
  MatrixArith::Entries e(dim() * dim());
  for (auto& x : e) {
    x = a % b;
    a /= b;
  }
  return e;
}

Index MatrixRing::encode(const MatrixArith::Entries& e) const {
  const Index b = base().order();
  Index a = 0;
  for (std::size_t k = e.size(); k-- > 0;) a = a * b + e[k];
  return a;
}

Index MatrixRing::add(Index a, Index b) const {
  const Index bo = base().order();
  Index out = 0, w = 1;
  for (std::size_t k = 0; k < dim() * dim(); ++k, w *= bo) {
    out += arith_.badd(a % bo, b % bo) * w;
    a /= bo;
    b /= bo;
  }
  return out;
}

Index MatrixRing::neg(Index a) const {
  const Index bo = base().order();
  Index out = 0, w = 1;
  for (std::size_t k = 0; k < dim() * dim(); ++k, w *= bo) {
    out += arith_.bneg(a % bo) * w;
    a /= bo;
  }
  return out;
}

Index MatrixRing::mul(Index a, Index b) const { return encode(arith_.mul(decode(a), decode(b))); }

std::string MatrixRing::pretty(Index a) const { return render(decode(a), dim(), base()); }

std::string MatrixRing::name() const {
  return "M(" + std::to_string(dim()) + ", " + base().name() + ")";
}

std::vector<Index> MatrixRing::additive_generators() const {
  std::vector<Index> gens;
  const auto base_gens = base().additive_generators();
  Index w = 1;
  for (std::size_t k = 0; k < dim() * dim(); ++k, w *= base().order()) {
    for (Index g : base_gens) gens.push_back(g * w);
  }
  return gens;
}

std::optional<Index> MatrixRing::inverse_by_determinant(Index a) const {
  auto inv = arith_.inverse_by_adjugate(decode(a));
  if (!inv) return std::nullopt;
  return encode(*inv);
}

std::optional<Index> MatrixRing::inverse_by_row_reduction(Index a) const {
  auto inv = arith_.inverse_by_row_reduction(decode(a));
  if (!inv) return std::nullopt;
  return encode(*inv);
}

std::optional<Index> MatrixRing::inverse(Index a) const { return inverse_by_determinant(a); }

// ---------------------------------------------------------------------------

TriangularRing::TriangularRing(std::size_t n, RingPtr base)
    : Ring(RingKind::kTriangular, checked_order(n, base, true), identity_index(n, base, true)),
      arith_(n, std::move(base)) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) positions_.push_back(i * n + j);
  }
}

MatrixArith::Entries TriangularRing::decode(Index a) const {
  const Index b = base().order();
  MatrixArith::Entries e(dim() * dim(), 0);
  for (std::size_t pos : positions_) {
    e[pos] = a % b;
    a /= b;
  }
  return e;
}

Index TriangularRing::encode(const MatrixArith::Entries& full) const {
  const Index b = base().order();
  Index a = 0;
  for (std::size_t t = positions_.size(); t-- > 0;) a = a * b + full[positions_[t]];
  return a;
}

Index TriangularRing::add(Index a, Index b) const {
  const Index bo = base().order();
  Index out = 0, w = 1;
  for (std::size_t t = 0; t < positions_.size(); ++t, w *= bo) {
    out += arith_.badd(a % bo, b % bo) * w;
    a /= bo;
    b /= bo;
  }
  return out;
}

Index TriangularRing::neg(Index a) const {
  const Index bo = base().order();
  Index out = 0, w = 1;
  for (std::size_t t = 0; t < positions_.size(); ++t, w *= bo) {
    out += arith_.bneg(a % bo) * w;
    a /= bo;
  }
  return out;
}

Index TriangularRing::mul(Index a, Index b) const {
  return encode(arith_.mul(decode(a), decode(b)));
}

std::string TriangularRing::pretty(Index a) const { return render(decode(a), dim(), base()); }

std::string TriangularRing::name() const {
  return "UT(" + std::to_string(dim()) + ", " + base().name() + ")";
}

std::vector<Index> TriangularRing::additive_generators() const {
  std::vector<Index> gens;
  const auto base_gens = base().additive_generators();
  Index w = 1;
  for (std::size_t t = 0; t < positions_.size(); ++t, w *= base().order()) {
    for (Index g : base_gens) gens.push_back(g * w);
  }
  return gens;
}

std::optional<Index> TriangularRing::inverse(Index a) const {
  // The inverse of an invertible upper-triangular matrix is upper-triangular.
  auto inv = arith_.inverse_by_adjugate(decode(a));
  if (!inv) return std::nullopt;
  return encode(*inv);
}

std::shared_ptr<const MatrixRing> make_matrix_ring(std::size_t n, RingPtr base) {
  return std::make_shared<MatrixRing>(n, std::move(base));
}

std::shared_ptr<const TriangularRing> make_triangular_ring(std::size_t n, RingPtr base) {
  return std::make_shared<TriangularRing>(n, std::move(base));
}

}  // namespace finring
