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

#include "finring/analysis.hpp"

#include <stdexcept>

#include "finring/kernels.hpp"
#include "finring/number_theory.hpp"
#include "finring/quotient.hpp"

namespace finring {

namespace {

void require_streamable(const Ring& r, const Budget& budget, const char* what) {
  if (r.order() > budget.stream_order) {
    throw ResourceError(std::string(what) + " of " + r.name() + " needs " +
                        std::to_string(r.order()) + " element visits; stream cap is " +
                        std::to_string(budget.stream_order));
  }
}

const MatrixRing* as_field_matrix_ring(const Ring& r) {
  if (r.kind() != RingKind::kMatrix) return nullptr;
  const auto& m = static_cast<const MatrixRing&>(r);
  return m.base().is_field() ? &m : nullptr;
}

void verify_group_laws(const Ring& r, const std::vector<Index>& units,
                       const std::vector<std::uint8_t>& is_unit) {
  if (!is_unit[r.one()]) throw std::logic_error("one is not a unit in " + r.name());
  for (Index u : units) {
    const auto inv = r.inverse(u);
    if (!inv || !is_unit[*inv] || r.mul(u, *inv) != r.one() || r.mul(*inv, u) != r.one()) {
      throw std::logic_error("unit " + r.pretty(u) + " lacks a two-sided inverse in " + r.name());
    }
    for (Index v : units) {
      if (!is_unit[r.mul(u, v)]) {
        throw std::logic_error("units not closed under multiplication in " + r.name());
      }
    }
  }
}

}  // namespace

Index characteristic(const Ring& r) {
  Index k = 1;
  for (Index acc = r.one(); acc != r.zero(); acc = r.add(acc, r.one())) ++k;
  return k;
}

bool is_commutative(const Ring& r) {
  const auto gens = r.additive_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (r.mul(gens[i], gens[j]) != r.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

bool is_boolean(const Ring& r, const Budget& budget) {
  require_streamable(r, budget, "booleanness check");
  for (Index x = 0; x < r.order(); ++x) {
    if (r.mul(x, x) != x) return false;
  }
  return true;
}

std::optional<Elem> is_unit(const Ring& r, Elem x) {
  r.check(x);
  const auto inv = r.inverse(x.index);
  if (!inv) return std::nullopt;
  if (r.mul(x.index, *inv) != r.one() || r.mul(*inv, x.index) != r.one()) {
    throw std::logic_error("inverse of " + r.pretty(x.index) + " is not two-sided");
  }
  return r.elem(*inv);
}

std::optional<Index> inverse_by_scan(const Ring& r, Index x) {
  r.check(x);
  for (Index y = 0; y < r.order(); ++y) {
    const bool right = r.mul(x, y) == r.one();
    const bool left = r.mul(y, x) == r.one();
    if (right != left) throw std::logic_error("one-sided inverse in " + r.name());
    if (right) return y;
  }
  return std::nullopt;
}

UnitGroupSummary unit_group(const Ring& r, const Budget& budget) {
  require_streamable(r, budget, "unit group");
  auto scan = kernels::scan_units_parallel(r, budget.threads);
  UnitGroupSummary out;
  out.count = scan.units.size();
  out.sum = scan.sum;
  if (out.count <= budget.closure_check_limit) {
    verify_group_laws(r, scan.units, scan.is_unit);
    out.closure_verified = true;
  }
  out.units = std::move(scan.units);
  return out;
}

UnitTally unit_tally(const Ring& r, const Budget& budget) {
  require_streamable(r, budget, "unit tally");
  if (const auto* m = as_field_matrix_ring(r)) {
    const auto t = kernels::gl_tally_parallel(*m, budget.threads);
    return {t.count, t.sum};
  }
  const auto scan = kernels::scan_units_parallel(r, budget.threads);
  return {scan.units.size(), scan.sum};
}

std::map<Index, std::uint64_t> first_column_classes(const MatrixRing& m, const Budget& budget) {
  require_streamable(m, budget, "first-column classes");
  return kernels::gl_tally_parallel(m, budget.threads).first_column_classes;
}

boost::multiprecision::cpp_int gl_order(std::uint64_t n, std::uint64_t q) {
  using boost::multiprecision::cpp_int;
  if (n == 0) throw ConstructionError("GL order needs n >= 1");
  if (!as_prime_power(q)) {
    throw ConstructionError(q < 2 ? std::to_string(q) + " is not a prime power"
                                  : format_factorization(q) + " is not a prime power");
  }
  const cpp_int qn = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(n));
  cpp_int result = 1;
  cpp_int q_pow = 1;  // q^(n-k), walking k from n down to 1
  for (std::uint64_t k = n; k >= 1; --k) {
    result *= qn - q_pow;
    q_pow *= q;
  }
  return result;
}

RadicalSummary jacobson_radical(const Ring& r, const Budget& budget) {
  if (r.order() > budget.eager_order) {
    throw ResourceError("radical of " + r.name() + " needs the full table of " +
                        std::to_string(r.order()) + " elements; eager cap is " +
                        std::to_string(budget.eager_order));
  }
  const auto n = static_cast<std::uint32_t>(r.order());
  const auto mul = kernels::mul_table_parallel(r, budget.threads);
  const auto units = kernels::scan_units_parallel(r, budget.threads);
  std::vector<std::uint32_t> one_minus(n);
  for (std::uint32_t v = 0; v < n; ++v) one_minus[v] = static_cast<std::uint32_t>(r.sub(r.one(), v));
  RadicalSummary out;
  out.members = kernels::radical_parallel({n, mul, one_minus, units.is_unit}, budget.threads);
  verify_ideal(r, out.members);
  out.is_zero = out.members.size() == 1;
  return out;
}

bool is_semisimple(const Ring& r, const Budget& budget) {
  return jacobson_radical(r, budget).is_zero;
}

std::uint64_t multiplicative_order(const Ring& r, Index x) {
  if (!r.inverse(x)) throw ContractError(r.pretty(x) + " is not a unit of " + r.name());
  std::uint64_t k = 1;
  for (Index acc = x; acc != r.one(); acc = r.mul(acc, x)) ++k;
  return k;
}

Index primitive_element(const Ring& r) {
  const bool field_kind = r.kind() == RingKind::kField || r.kind() == RingKind::kModular;
  if (!field_kind || !r.is_field()) throw ContractError(r.name() + " is not a finite field");
  const Index q = r.order();
  for (Index x = 1; x < q; ++x) {
    if (multiplicative_order(r, x) != q - 1) continue;
    if (q > 2) {
      // 1 + x + ... + x^(q-2) vanishes for a generator x != 1.
      Index sum = 0, power = r.one();
      for (Index k = 0; k + 1 < q; ++k) {
        sum = r.add(sum, power);
        power = r.mul(power, x);
      }
      if (sum != r.zero()) throw std::logic_error("geometric sum of a generator is nonzero");
    }
    return x;
  }
  throw std::logic_error("no generator in " + r.name());
}

}  // namespace finring
