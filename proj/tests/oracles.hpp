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

#ifndef FINRING_TESTS_ORACLES_HPP_
#define FINRING_TESTS_ORACLES_HPP_

// Brute-force reference computations. Everything here works from add/mul
// alone and never calls the library's analysis code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "finring/ring.hpp"

namespace oracle {

using finring::Index;
using finring::Ring;

// First violated axiom, or empty when every law holds on the full triples.
inline std::string axiom_failure(const Ring& r) {
  const Index n = r.order();
  for (Index a = 0; a < n; ++a) {
    if (r.add(a, 0) != a || r.add(0, a) != a) return "additive identity";
    if (r.add(a, r.neg(a)) != 0) return "additive inverse";
    if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a) return "unity";
    for (Index b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) return "additive commutativity";
      for (Index c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return "additive associativity";
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return "multiplicative associativity";
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return "left distributivity";
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return "right distributivity";
      }
    }
  }
  return {};
}

// Same laws on a deterministic sample of triples, for rings too large to cube.
inline std::string sampled_axiom_failure(const Ring& r, std::uint64_t samples, std::uint64_t seed) {
  std::uint64_t s = seed;
  auto next = [&] {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s % r.order();
  };
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Index a = next(), b = next(), c = next();
    if (r.add(a, 0) != a || r.add(a, r.neg(a)) != 0) return "additive identity/inverse";
    if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a) return "unity";
    if (r.add(a, b) != r.add(b, a)) return "additive commutativity";
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return "additive associativity";
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return "multiplicative associativity";
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return "left distributivity";
    if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return "right distributivity";
  }
  return {};
}

inline std::uint64_t characteristic(const Ring& r) {
  Index x = r.one();
  std::uint64_t k = 1;
  while (x != 0) {
    x = r.add(x, r.one());
    ++k;
  }
  return k;
}

inline bool commutative(const Ring& r) {
  for (Index a = 0; a < r.order(); ++a)
    for (Index b = 0; b < a; ++b)
      if (r.mul(a, b) != r.mul(b, a)) return false;
  return true;
}

inline bool boolean(const Ring& r) {
  for (Index a = 0; a < r.order(); ++a)
    if (r.mul(a, a) != a) return false;
  return true;
}

inline std::optional<Index> two_sided_inverse(const Ring& r, Index x) {
  for (Index y = 0; y < r.order(); ++y)
    if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) return y;
  return std::nullopt;
}

struct Units {
  std::vector<Index> list;
  Index sum = 0;
};

inline Units units(const Ring& r) {
  Units u;
  for (Index x = 0; x < r.order(); ++x) {
    if (two_sided_inverse(r, x)) {
      u.list.push_back(x);
      u.sum = r.add(u.sum, x);
    }
  }
  return u;
}

// a lies in J(R) iff 1 - xa is a unit for every x.
inline std::vector<Index> radical(const Ring& r) {
  std::vector<bool> unit(r.order(), false);
  for (Index x : units(r).list) unit[x] = true;
  std::vector<Index> j;
  for (Index a = 0; a < r.order(); ++a) {
    bool in = true;
    for (Index x = 0; x < r.order() && in; ++x) in = unit[r.sub(r.one(), r.mul(x, a))];
    if (in) j.push_back(a);
  }
  return j;
}

// Leibniz determinant over a commutative ring given by callbacks.
template <class Add, class Mul, class Neg>
Index leibniz_det(const std::vector<Index>& m, std::size_t n, Index one, Add add, Mul mul, Neg neg) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Index det = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Index term = one;
    for (std::size_t i = 0; i < n; ++i) term = mul(term, m[i * n + perm[i]]);
    det = add(det, inversions % 2 ? neg(term) : term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Invertible n x n matrices over a field: nonzero Leibniz determinant.
// Entries decode LSB-first, entry k weighted |F|^k.
inline std::uint64_t gl_count(std::size_t n, const Ring& field) {
  const Index q = field.order();
  Index total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= q;
  std::vector<Index> m(n * n);
  std::uint64_t count = 0;
  for (Index code = 0; code < total; ++code) {
    Index c = code;
    for (auto& e : m) {
      e = c % q;
      c /= q;
    }
    const Index det = leibniz_det(
        m, n, field.one(), [&](Index a, Index b) { return field.add(a, b); },
        [&](Index a, Index b) { return field.mul(a, b); }, [&](Index a) { return field.neg(a); });
    count += det != 0;
  }
  return count;
}

// Closed-form |GL_n(F_q)| = q^(n(n-1)/2) * prod_{i=1..n} (q^i - 1).
inline std::uint64_t gl_product_form(std::uint64_t n, std::uint64_t q) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < n * (n - 1) / 2; ++i) result *= q;
  std::uint64_t qi = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    qi *= q;
    result *= qi - 1;
  }
  return result;
}

}  // namespace oracle

#endif  // FINRING_TESTS_ORACLES_HPP_
