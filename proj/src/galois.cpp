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

#include "finring/galois.hpp"

#include <algorithm>
#include <sstream>

#include "finring/number_theory.hpp"

namespace finring {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor.
Poly poly_mod(Poly a, const Poly& monic, std::uint64_t p) {
  trim(a);
  const std::size_t d = monic.size() - 1;
  while (a.size() > d) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * monic[i]) % p;
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p
// digits of t, c_0 least significant.
Poly monic_from_digits(std::uint64_t t, unsigned d, std::uint64_t p) {
  Poly out(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    out[i] = t % p;
    t /= p;
  }
  out[d] = 1;
  return out;
}

}  // namespace

bool is_irreducible(const Poly& poly, std::uint64_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= deg / 2; ++d) {
    const auto count = checked_pow(p, d, ~std::uint64_t{0});
    for (std::uint64_t t = 0; t < *count; ++t) {
      if (poly_mod(f, monic_from_digits(t, d, p), p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(std::uint64_t p, unsigned s) {
  const auto count = checked_pow(p, s, kMaxOrder);
  if (!count) throw ConstructionError("GF(p^s) with p^s above the order cap");
  // Enumerate (c_0, ..., c_{s-1}) in lexicographic order: c_0 is the most
  // significant digit of the counter.
  for (std::uint64_t t = 0; t < *count; ++t) {
    Poly f(s + 1, 0);
    std::uint64_t rest = t;
    for (unsigned i = s; i-- > 0;) {
      f[i] = rest % p;
      rest /= p;
    }
    f[s] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldSpec field_spec(std::uint64_t q) {
  if (q > kMaxOrder) {
    throw ConstructionError("GF(" + std::to_string(q) + ") exceeds the order cap");
  }
  auto pp = as_prime_power(q);
  if (!pp) {
    if (q < 2) throw ConstructionError(std::to_string(q) + " is not a prime power");
    throw ConstructionError(format_factorization(q) + " is not a prime power");
  }
  return FieldSpec{pp->p, pp->s, q, smallest_irreducible(pp->p, pp->s)};
}

GaloisField::GaloisField(FieldSpec spec)
    : Ring(RingKind::kField, spec.q, 1), spec_(std::move(spec)) {
  const std::uint64_t q = spec_.q;
  if (q > kTableLimit) return;
  // Find a generator by order scan and fill log/exp tables.
  for (Index g = 1; g < q; ++g) {
    std::vector<std::uint32_t> exp(q - 1);
    Index x = 1;
    bool full = true;
    for (std::uint64_t k = 0; k < q - 1; ++k) {
      if (k > 0 && x == 1) {
        full = false;
        break;
      }
      exp[k] = static_cast<std::uint32_t>(x);
      x = poly_mul(x, g);
    }
    if (!full || x != 1) continue;
    log_.assign(q, 0);
    for (std::uint64_t k = 0; k < q - 1; ++k) log_[exp[k]] = static_cast<std::uint32_t>(k);
    exp_ = std::move(exp);
    return;
  }
}

Poly GaloisField::coefficients(Index a) const {
  Poly c(spec_.s, 0);
  for (unsigned i = 0; i < spec_.s; ++i) {
    c[i] = a % spec_.p;
    a /= spec_.p;
  }
  return c;
}

Index GaloisField::encode(const Poly& coeffs) const {
  Index a = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) a = a * spec_.p + coeffs[i] % spec_.p;
  return a;
}

Index GaloisField::add(Index a, Index b) const {
  const std::uint64_t p = spec_.p;
  if (p == 2) return a ^ b;
  if (spec_.s == 1) {
    Index t = a + b;
    return t >= p ? t - p : t;
  }
  Index out = 0, w = 1;
  while (a != 0 || b != 0) {
    out += ((a % p + b % p) % p) * w;
    a /= p;
    b /= p;
    w *= p;
  }
  return out;
}

Index GaloisField::neg(Index a) const {
  const std::uint64_t p = spec_.p;
  if (p == 2) return a;
  Index out = 0, w = 1;
  while (a != 0) {
    out += ((p - a % p) % p) * w;
    a /= p;
    w *= p;
  }
  return out;
}

Index GaloisField::mul(Index a, Index b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    const std::uint64_t n = spec_.q - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % n];
  }
  return poly_mul(a, b);
}

Index GaloisField::poly_mul(Index a, Index b) const {
  const std::uint64_t p = spec_.p;
  if (spec_.s == 1) return (a * b) % p;
  const Poly x = coefficients(a), y = coefficients(b);
  Poly prod(2 * spec_.s - 1, 0);
  for (unsigned i = 0; i < spec_.s; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < spec_.s; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  Poly r = poly_mod(std::move(prod), spec_.modulus, p);
  r.resize(spec_.s, 0);
  return encode(r);
}

std::optional<Index> GaloisField::inverse(Index a) const {
  if (a == 0) return std::nullopt;
  if (!exp_.empty()) {
    const std::uint64_t n = spec_.q - 1;
    return exp_[(n - log_[a]) % n];
  }
  // a^(q-2)
  Index result = 1, base = a;
  for (std::uint64_t e = spec_.q - 2; e > 0; e >>= 1) {
    if (e & 1) result = poly_mul(result, base);
    base = poly_mul(base, base);
  }
  return result;
}

std::string GaloisField::pretty(Index a) const {
  if (spec_.s == 1 || a == 0) return std::to_string(a);
  const Poly c = coefficients(a);
  std::ostringstream out;
  bool first = true;
  for (unsigned i = spec_.s; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c[i];
      continue;
    }
    if (c[i] != 1) out << c[i];
    out << 'a';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

std::vector<Index> GaloisField::additive_generators() const {
  std::vector<Index> gens;
  Index w = 1;
  for (unsigned i = 0; i < spec_.s; ++i, w *= spec_.p) gens.push_back(w);
  return gens;
}

std::shared_ptr<const GaloisField> make_gf(std::uint64_t q) {
  return std::make_shared<GaloisField>(field_spec(q));
}

}  // namespace finring
