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

#include "finring/theorems.hpp"

#include <chrono>
#include <stdexcept>

#include "finring/enumeration.hpp"
#include "finring/galois.hpp"
#include "finring/matrix.hpp"
#include "finring/number_theory.hpp"
#include "finring/quotient.hpp"
#include "finring/ring_expr.hpp"
#include "finring/table_ring.hpp"

namespace finring {

namespace {

const char* kClaims[] = {
    "",
    "boolean => characteristic 2, commutative, units = {1}",
    "characteristic != 2 => no unit equals its negative and the units sum to 0",
    "characteristic != 2 => the unit count is even",
    "field GF(q): units sum to 1 if q = 2, else 0; 1 + g + ... + g^(q-2) = 0 for a generator g",
    "|GL_n(F_q)| = prod_{k=1..n} (q^n - q^(n-k))",
    "characteristic 2, n >= 2: |GL_n(F)| even, sum of GL_n(F) = 0, first-column classes even",
    "finite ring with units = {1} => boolean, characteristic 2, commutative, J(R) = 0",
    "UT_n(Z_2) has 2^(n(n-1)/2) units summing to E_12 for n = 2 and to 0 for n >= 3",
    "J(R/J(R)) = 0",
};

// Structured rings that join every generic population.
const char* kSpotRings[] = {
    "B(1)", "B(2)", "B(3)", "B(4)", "B(5)", "B(6)",
    "M(2, Z(2))", "M(2, Z(3))", "M(2, Z(4))", "M(2, GF(4))", "M(3, Z(2))",
    "UT(1, Z(2))", "UT(2, Z(2))", "UT(3, Z(2))", "UT(4, Z(2))", "UT(2, Z(3))", "UT(2, Z(4))",
    "UT(3, Z(3))", "UT(2, GF(4))",
    "Z(2) x Z(3)", "Z(2) x Z(4)", "Z(3) x Z(3)", "Z(2) x GF(4)", "Z(4) x Z(4)", "M(2, Z(2)) x Z(3)",
    "GF(4)", "GF(8)", "GF(9)", "GF(16)", "GF(25)", "GF(27)",
};

Counterexample make_cx(const Ring& r, std::vector<Index> witness, std::string detail) {
  Counterexample cx;
  cx.ring = r.name();
  if ((r.kind() == RingKind::kTable || r.kind() == RingKind::kQuotient) && r.order() <= kEagerOrder) {
    cx.table = serialize(tabulate(r));
  }
  cx.witness = std::move(witness);
  cx.detail = std::move(detail);
  return cx;
}

const MatrixRing* field_matrix(const Ring& r) {
  if (r.kind() != RingKind::kMatrix) return nullptr;
  const auto& m = static_cast<const MatrixRing&>(r);
  return m.base().is_field() ? &m : nullptr;
}

std::optional<Counterexample> check_t1(const Ring& r, const Budget& b) {
  if (characteristic(r) != 2) return make_cx(r, {}, "characteristic " + std::to_string(characteristic(r)));
  if (!is_commutative(r)) return make_cx(r, {}, "not commutative");
  const auto u = unit_group(r, b);
  if (u.count != 1 || u.units.front() != r.one()) {
    return make_cx(r, u.units, std::to_string(u.count) + " units");
  }
  return std::nullopt;
}

std::optional<Counterexample> check_t2(const Ring& r, const Budget& b) {
  const auto u = unit_group(r, b);
  for (Index x : u.units) {
    if (r.neg(x) == x) return make_cx(r, {x}, "unit " + r.pretty(x) + " equals its negative");
  }
  if (u.sum != r.zero()) return make_cx(r, {u.sum}, "unit sum " + r.pretty(u.sum));
  return std::nullopt;
}

std::optional<Counterexample> check_t3(const Ring& r, const Budget& b) {
  const auto u = unit_group(r, b);
  if (u.count % 2 != 0) return make_cx(r, {}, std::to_string(u.count) + " units (odd)");
  return std::nullopt;
}

bool field_kind(const Ring& r) {
  return (r.kind() == RingKind::kField || r.kind() == RingKind::kModular) && r.is_field();
}

std::optional<Counterexample> check_t4(const Ring& r, const Budget& b) {
  const Index q = r.order();
  const auto u = unit_group(r, b);
  if (u.count != q - 1) return make_cx(r, {}, std::to_string(u.count) + " units, expected q - 1");
  const Index expected = q == 2 ? r.one() : r.zero();
  if (u.sum != expected) return make_cx(r, {u.sum}, "unit sum " + r.pretty(u.sum));
  if (q == 2) return std::nullopt;
  try {
    const Index g = primitive_element(r);
    Index sum = 0, power = r.one();
    for (Index k = 0; k + 1 < q; ++k) {
      sum = r.add(sum, power);
      power = r.mul(power, g);
    }
    if (sum != r.zero()) return make_cx(r, {g, sum}, "geometric sum of a generator");
  } catch (const std::logic_error& e) {
    return make_cx(r, {}, e.what());
  }
  return std::nullopt;
}

std::optional<Counterexample> check_t5(const Ring& r, const Budget& b) {
  const auto* m = field_matrix(r);
  if (!m) return make_cx(r, {}, "not a matrix ring over a field");
  if (m->order() > b.stream_order) {
    throw ResourceError("brute-force GL count of " + r.name() + " exceeds the stream cap");
  }
  const auto formula = gl_order(m->dim(), m->base().order());
  std::uint64_t brute = 0;
  for (Index x = 0; x < m->order(); ++x) brute += m->inverse_by_row_reduction(x).has_value();
  if (formula != brute) {
    return make_cx(r, {}, "formula " + formula.str() + " vs brute force " + std::to_string(brute));
  }
  return std::nullopt;
}

std::optional<Counterexample> check_t6(const Ring& r, const Budget& b) {
  const auto* m = field_matrix(r);
  if (!m) return make_cx(r, {}, "not a matrix ring over a field");
  const auto tally = unit_tally(*m, b);
  if (tally.count % 2 != 0) return make_cx(r, {}, std::to_string(tally.count) + " units (odd)");
  if (tally.sum != r.zero()) return make_cx(r, {tally.sum}, "unit sum " + r.pretty(tally.sum));
  if (gl_order(m->dim(), m->base().order()) != tally.count) {
    return make_cx(r, {}, "unit count disagrees with the GL order formula");
  }
  for (const auto& [column, size] : first_column_classes(*m, b)) {
    if (size % 2 != 0) {
      return make_cx(r, {column}, "first-column class of size " + std::to_string(size));
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> check_t7(const Ring& r, const Budget& b) {
  if (!is_boolean(r, b)) {
    for (Index x = 0; x < r.order(); ++x) {
      if (r.mul(x, x) != x) return make_cx(r, {x}, "x^2 != x for x = " + r.pretty(x));
    }
  }
  if (characteristic(r) != 2) return make_cx(r, {}, "characteristic " + std::to_string(characteristic(r)));
  if (!is_commutative(r)) return make_cx(r, {}, "not commutative");
  const auto j = jacobson_radical(r, b);
  if (!j.is_zero) return make_cx(r, j.members, "nonzero radical");
  return std::nullopt;
}

bool is_ut_z2(const Ring& r) {
  return r.kind() == RingKind::kTriangular && static_cast<const TriangularRing&>(r).base().order() == 2;
}

bool premise_holds(CheckId id, const Ring& r, const Budget& b) {
  if (r.order() < 2) return false;  // the zero ring is never in a population
  switch (id) {
    case CheckId::kT1: return is_boolean(r, b);
    case CheckId::kT2:
    case CheckId::kT3: return characteristic(r) != 2;
    case CheckId::kT4: return field_kind(r);
    case CheckId::kT5: return field_matrix(r) != nullptr;
    case CheckId::kT6: {
      const auto* m = field_matrix(r);
      return m && m->dim() >= 2 && characteristic(m->base()) == 2;
    }
    case CheckId::kT7: return unit_group(r, b).count == 1;
    case CheckId::kT8: return is_ut_z2(r);
    case CheckId::kT9: return r.order() <= b.eager_order;
  }
  return false;
}

std::optional<Counterexample> check_t8(const Ring& r, const Budget& b) {
  if (!is_ut_z2(r)) return make_cx(r, {}, "not UT_n(Z_2)");
  const auto& t = static_cast<const TriangularRing&>(r);
  const std::size_t n = t.dim();
  const auto u = unit_group(r, b);
  const std::uint64_t expected_count = std::uint64_t{1} << (n * (n - 1) / 2);
  if (u.count != expected_count) {
    return make_cx(r, {}, std::to_string(u.count) + " units, expected " + std::to_string(expected_count));
  }
  Index expected_sum = r.zero();
  if (n == 1) {
    expected_sum = r.one();
  } else if (n == 2) {
    MatrixArith::Entries e12(4, 0);
    e12[1] = t.base().one();
    expected_sum = t.encode(e12);
    MatrixArith::Entries upper = t.arith().identity();
    upper[1] = t.base().one();
    if (u.units != std::vector<Index>{std::min(r.one(), t.encode(upper)), std::max(r.one(), t.encode(upper))}) {
      return make_cx(r, u.units, "unit set differs from {I, [[1,1],[0,1]]}");
    }
  }
  if (u.sum != expected_sum) return make_cx(r, {u.sum}, "unit sum " + r.pretty(u.sum));
  return std::nullopt;
}

std::optional<Counterexample> check_t9(const RingPtr& r, const Budget& b) {
  const auto j = jacobson_radical(*r, b);
  const auto quotient = quotient_ring(r, j.members);
  const auto jq = jacobson_radical(*quotient, b);
  if (!jq.is_zero) return make_cx(*r, jq.members, "R/J(R) has a nonzero radical");
  return std::nullopt;
}

struct Population {
  std::vector<RingPtr> rings;
  std::string description;
  bool complete = true;
  std::vector<std::string> notes;
};

// Structured spot rings, Z_n, and enumerated rings (raw and up to iso).
Population generic_population(const CheckParams& params) {
  Population pop;
  for (Index n = 2; n <= params.zn_max; ++n) pop.rings.push_back(make_ring("Z(" + std::to_string(n) + ")"));
  for (const char* expr : kSpotRings) pop.rings.push_back(make_ring(expr));
  const std::size_t structured = pop.rings.size();
  std::size_t raw = 0, iso = 0;
  for (std::uint64_t order = 2; order <= params.max_order; ++order) {
    for (bool up_to_iso : {false, true}) {
      EnumerationOptions opts;
      opts.up_to_iso = up_to_iso;
      opts.threads = params.budget.threads;
      opts.node_budget = params.node_budget;
      const auto result = enumerate_unital_rings(order, opts);
      if (!result.complete) {
        pop.complete = false;
        pop.notes.push_back("enumeration of order " + std::to_string(order) +
                            (up_to_iso ? " (up to iso)" : " (raw)") +
                            " incomplete; resume token " + result.resume_token);
      }
      for (std::size_t i = 0; i < result.rings.size(); ++i) {
        const std::string name = "enumerated order-" + std::to_string(order) + (up_to_iso ? " class #" : " raw #") +
                                 std::to_string(i);
        pop.rings.push_back(TableRing::trusted(result.rings[i], RingKind::kTable, name));
      }
      (up_to_iso ? iso : raw) += result.rings.size();
    }
  }
  if (params.max_order < 2) {
    pop.notes.push_back("enumerated population is empty (max order " + std::to_string(params.max_order) +
                        "; the zero ring is excluded)");
  }
  pop.description = std::to_string(structured) + " structured rings (Z_n for n <= " +
                    std::to_string(params.zn_max) + ", products, matrix, triangular, fields) + " +
                    std::to_string(raw) + " enumerated labeled rings and " + std::to_string(iso) +
                    " isomorphism classes of order 2.." + std::to_string(params.max_order);
  return pop;
}

Population field_population(const CheckParams& params) {
  Population pop;
  for (auto q : params.fields) pop.rings.push_back(make_gf(q));
  pop.description = std::to_string(params.fields.size()) + " fields GF(q)";
  return pop;
}

Population matrix_population(const std::vector<std::pair<std::size_t, std::uint64_t>>& pairs,
                             const std::string& what) {
  Population pop;
  for (auto [n, q] : pairs) pop.rings.push_back(make_matrix_ring(n, make_gf(q)));
  pop.description = std::to_string(pairs.size()) + " " + what;
  return pop;
}

Population triangular_population(const CheckParams& params) {
  Population pop;
  for (auto n : params.triangular_dims) pop.rings.push_back(make_triangular_ring(n, make_gf(2)));
  pop.description = std::to_string(params.triangular_dims.size()) + " rings UT_n(Z_2)";
  return pop;
}

TheoremReport evaluate(CheckId id, const Population& pop, const CheckParams& params) {
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report;
  report.id = id;
  report.claim = kClaims[static_cast<int>(id)];
  report.population = pop.description;
  report.complete = pop.complete;
  report.notes = pop.notes;
  for (const auto& ring : pop.rings) {
    if (ring->order() < 2) continue;
    ++report.population_count;
    if (!premise_holds(id, *ring, params.budget)) continue;
    ++report.premise_count;
    auto cx = find_violation(id, ring, false, params.budget);
    if (cx) {
      report.passed = false;
      report.counterexample = std::move(cx);
      break;
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

std::string to_string(CheckId id) { return "T" + std::to_string(static_cast<int>(id)); }

std::optional<CheckId> parse_check_id(std::string_view text) {
  if (text == "main") return CheckId::kT7;
  if (text.size() == 2 && (text[0] == 'T' || text[0] == 't') && text[1] >= '1' && text[1] <= '9') {
    return static_cast<CheckId>(text[1] - '0');
  }
  return std::nullopt;
}

std::optional<Counterexample> find_violation(CheckId id, const RingPtr& ring, bool require_premise,
                                             const Budget& budget) {
  const Ring& r = *ring;
  if (r.order() < 2) return std::nullopt;  // the zero ring is never in a population
  if (require_premise && !premise_holds(id, r, budget)) return std::nullopt;
  switch (id) {
    case CheckId::kT1: return check_t1(r, budget);
    case CheckId::kT2: return check_t2(r, budget);
    case CheckId::kT3: return check_t3(r, budget);
    case CheckId::kT4: return check_t4(r, budget);
    case CheckId::kT5: return check_t5(r, budget);
    case CheckId::kT6: return check_t6(r, budget);
    case CheckId::kT7: return check_t7(r, budget);
    case CheckId::kT8: return check_t8(r, budget);
    case CheckId::kT9: return check_t9(ring, budget);
  }
  return std::nullopt;
}

bool recheck(CheckId id, const Counterexample& cx, bool require_premise) {
  const RingPtr ring = cx.table.empty() ? make_ring(cx.ring) : RingPtr(make_table_ring(parse_table_ring(cx.table)));
  return find_violation(id, ring, require_premise).has_value();
}

std::uint64_t brute_force_gl_count(std::size_t n, std::uint64_t q) {
  const auto m = make_matrix_ring(n, make_gf(q));
  if (m->order() > Budget{}.stream_order) {
    throw ResourceError("brute-force GL count over " + std::to_string(m->order()) + " matrices");
  }
  std::uint64_t count = 0;
  for (Index x = 0; x < m->order(); ++x) count += m->inverse_by_row_reduction(x).has_value();
  return count;
}

TheoremReport run_check(CheckId id, const CheckParams& params) {
  switch (id) {
    case CheckId::kT4: return evaluate(id, field_population(params), params);
    case CheckId::kT5: {
      auto report = evaluate(id, matrix_population(params.gl_pairs, "matrix rings M_n(GF(q))"), params);
      for (auto [n, q] : params.gl_pairs) {
        report.notes.push_back("n=" + std::to_string(n) + " q=" + std::to_string(q) + ": formula " +
                               gl_order(n, q).str() + ", brute force " +
                               std::to_string(brute_force_gl_count(n, q)));
      }
      return report;
    }
    case CheckId::kT6:
      return evaluate(id, matrix_population(params.char2_matrices, "characteristic-2 matrix rings"), params);
    case CheckId::kT8: return evaluate(id, triangular_population(params), params);
    default: return evaluate(id, generic_population(params), params);
  }
}

std::vector<TheoremReport> run_all(const CheckParams& params) {
  const Population generic = generic_population(params);
  std::vector<TheoremReport> out;
  for (CheckId id : kAllChecks) {
    switch (id) {
      case CheckId::kT4:
      case CheckId::kT5:
      case CheckId::kT6:
      case CheckId::kT8: out.push_back(run_check(id, params)); break;
      default: out.push_back(evaluate(id, generic, params)); break;
    }
  }
  return out;
}

}  // namespace finring
