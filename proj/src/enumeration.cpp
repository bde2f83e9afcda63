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

#include "finring/enumeration.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "finring/analysis.hpp"
#include "finring/number_theory.hpp"

namespace finring {

namespace {

constexpr std::size_t kMaxGens = 4;  // 2^4 = 16 is the widest shape in scope

// Standard additive group Z_{d_0} x ... with all arithmetic tabulated.
struct Group {
  std::vector<std::uint64_t> d;
  std::size_t k = 0;
  std::uint32_t order = 1;
  std::uint64_t exponent = 1;  // d_0, kills every element
  std::vector<std::uint32_t> weight;
  std::vector<std::array<std::uint8_t, kMaxGens>> coords;
  std::vector<std::uint32_t> add_tab;
  std::vector<std::uint32_t> scale_tab;  // scale_tab[m * order + x] = m x, m < exponent
  std::vector<std::uint64_t> elem_order;

  explicit Group(std::vector<std::uint64_t> factors) : d(std::move(factors)), k(d.size()) {
    for (auto f : d) {
      weight.push_back(order);
      order *= static_cast<std::uint32_t>(f);
    }
    exponent = d.empty() ? 1 : d.front();
    coords.resize(order);
    for (std::uint32_t x = 0; x < order; ++x) {
      std::uint32_t t = x;
      coords[x].fill(0);
      for (std::size_t i = 0; i < k; ++i) {
        coords[x][i] = static_cast<std::uint8_t>(t % d[i]);
        t /= static_cast<std::uint32_t>(d[i]);
      }
    }
    add_tab.resize(std::size_t{order} * order);
    for (std::uint32_t x = 0; x < order; ++x) {
      for (std::uint32_t y = 0; y < order; ++y) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < k; ++i) s += ((coords[x][i] + coords[y][i]) % d[i]) * weight[i];
        add_tab[x * order + y] = s;
      }
    }
    scale_tab.resize(exponent * order);
    for (std::uint64_t m = 0; m < exponent; ++m) {
      for (std::uint32_t x = 0; x < order; ++x) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < k; ++i) s += ((m * coords[x][i]) % d[i]) * weight[i];
        scale_tab[m * order + x] = s;
      }
    }
    elem_order.resize(order);
    for (std::uint32_t x = 0; x < order; ++x) {
      std::uint64_t o = 1;
      for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t oi = d[i] / std::gcd<std::uint64_t>(d[i], coords[x][i]);
        o = std::lcm(o, oi);
      }
      elem_order[x] = o;
    }
  }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return add_tab[x * order + y]; }
  std::uint32_t scale(std::uint64_t m, std::uint32_t x) const {
    return scale_tab[(m % exponent) * order + x];
  }

  // Bilinear product from structure constants c[i * k + j] = e_i e_j.
  std::uint32_t product(const std::vector<std::uint32_t>& c, std::uint32_t x, std::uint32_t y) const {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!coords[x][i]) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (!coords[y][j]) continue;
        s = add(s, scale(std::uint64_t{coords[x][i]} * coords[y][j], c[i * k + j]));
      }
    }
    return s;
  }

  TableRingData tables(const std::vector<std::uint32_t>& c, std::uint32_t one) const {
    TableRingData t;
    t.order = order;
    t.zero = 0;
    t.one = one;
    t.additive_type = d;
    t.add_table = add_tab;
    t.mul_table.resize(std::size_t{order} * order);
    for (std::uint32_t x = 0; x < order; ++x) {
      for (std::uint32_t y = 0; y < order; ++y) t.mul_table[x * order + y] = product(c, x, y);
    }
    return t;
  }

  // Unity from structure constants, if any: u e_j = e_j = e_j u for all j.
  std::optional<std::uint32_t> unity(const std::vector<std::uint32_t>& c) const {
    for (std::uint32_t u = 0; u < order; ++u) {
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        std::uint32_t left = 0, right = 0;
        for (std::size_t i = 0; i < k; ++i) {
          left = add(left, scale(coords[u][i], c[i * k + j]));
          right = add(right, scale(coords[u][i], c[j * k + i]));
        }
        ok = left == weight[j] && right == weight[j];
      }
      if (ok) return u;
    }
    return std::nullopt;
  }
};

std::vector<std::vector<unsigned>> partitions(unsigned n, unsigned max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<unsigned>> out;
  for (unsigned first = std::min(n, max_part); first >= 1; --first) {
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

// Calls fn(constants, one) for every additive basis of r, i.e. every
// isomorphism from the standard group of r's additive type onto (r, +).
void for_each_basis(const TableRingData& r, const std::vector<std::uint64_t>& type,
                    const std::function<void(const std::vector<std::uint32_t>&, std::uint32_t)>& fn) {
  const std::uint32_t n = r.order;
  const std::size_t k = type.size();
  std::vector<std::uint64_t> ord(n, 1);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t acc = x;
    while (acc != r.zero) {
      acc = r.add(acc, x);
      ++ord[x];
    }
  }
  std::vector<std::uint32_t> basis(k);
  std::vector<std::uint32_t> phi{r.zero};  // standard index -> element of r
  std::vector<std::uint32_t> inv(n);
  std::vector<std::uint32_t> c(k * k);
  std::vector<std::uint8_t> hit(n);

  std::function<void(std::size_t)> choose = [&](std::size_t t) {
    if (t == k) {
      for (std::uint32_t a = 0; a < n; ++a) inv[phi[a]] = a;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) c[i * k + j] = inv[r.mul(basis[i], basis[j])];
      }
      fn(c, inv[r.one]);
      return;
    }
    const std::size_t base_size = phi.size();
    for (std::uint32_t g = 0; g < n; ++g) {
      if (ord[g] != type[t]) continue;
      // phi extended by multiples of g must stay injective.
      std::fill(hit.begin(), hit.end(), 0);
      std::vector<std::uint32_t> next(phi);
      next.resize(base_size * type[t]);
      bool ok = true;
      std::uint32_t mg = r.zero;
      for (std::uint64_t m = 0; m < type[t] && ok; ++m) {
        for (std::size_t a = 0; a < base_size; ++a) {
          const std::uint32_t v = r.add(phi[a], mg);
          if (hit[v]) {
            ok = false;
            break;
          }
          hit[v] = 1;
          next[a + m * base_size] = v;
        }
        mg = r.add(mg, g);
      }
      if (!ok) continue;
      basis[t] = g;
      std::swap(phi, next);
      choose(t + 1);
      std::swap(phi, next);
    }
  };
  choose(0);
}

std::vector<std::uint64_t> type_of(const TableRingData& r) {
  return r.additive_type.empty() ? additive_type_of(r.order, r.add_table, r.zero) : r.additive_type;
}

struct Unit {
  std::size_t shape;
  std::optional<std::uint32_t> first;  // value of the first placed constant
};

struct UnitResult {
  std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> rings;  // constants, one
  std::uint64_t nodes = 0;
  bool aborted = false;
};

// Backtracking over structure constants of one shape.
class Search {
 public:
  Search(const Group& g, SearchOrder order) : g_(g), k_(g.k), p_(g.k * g.k), order_(order) {
    for (std::size_t pos = 0; pos < p_; ++pos) seq_.push_back(pos);
    if (order_ == SearchOrder::kReverse) std::reverse(seq_.begin(), seq_.end());
    cands_.resize(p_);
    for (std::size_t pos = 0; pos < p_; ++pos) {
      const std::uint64_t bound = std::gcd(g.d[pos / k_], g.d[pos % k_]);
      for (std::uint32_t x = 0; x < g.order; ++x) {
        if (bound % g.elem_order[x] == 0) cands_[pos].push_back(x);
      }
      if (order_ == SearchOrder::kReverse) std::reverse(cands_[pos].begin(), cands_[pos].end());
    }
  }

  const std::vector<std::uint32_t>& first_candidates() const {
    static const std::vector<std::uint32_t> none;
    return p_ == 0 ? none : cands_[seq_[0]];
  }

  UnitResult run(std::optional<std::uint32_t> first, std::uint64_t cap) const {
    UnitResult out;
    std::vector<std::uint32_t> c(p_, 0);
    std::vector<std::uint8_t> placed(p_, 0);
    if (!first) {
      dfs(0, c, placed, out, cap);
      return out;
    }
    ++out.nodes;
    c[seq_[0]] = *first;
    placed[seq_[0]] = 1;
    if (consistent(seq_[0], c, placed)) dfs(1, c, placed, out, cap);
    return out;
  }

 private:
  // Checks every associativity triple that involves `pos` and is fully determined.
  bool consistent(std::size_t pos, const std::vector<std::uint32_t>& c,
                  const std::vector<std::uint8_t>& placed) const {
    const std::size_t pa = pos / k_, pb = pos % k_;
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        for (std::size_t l = 0; l < k_; ++l) {
          if (i != pa && l != pb) continue;
          std::uint32_t lhs = 0, rhs = 0;
          if (!eval_left(i, j, l, c, placed, lhs) || !eval_right(i, j, l, c, placed, rhs)) continue;
          if (lhs != rhs) return false;
        }
      }
    }
    return true;
  }

  // (e_i e_j) e_l
  bool eval_left(std::size_t i, std::size_t j, std::size_t l, const std::vector<std::uint32_t>& c,
                 const std::vector<std::uint8_t>& placed, std::uint32_t& out) const {
    if (!placed[i * k_ + j]) return false;
    const auto& v = g_.coords[c[i * k_ + j]];
    for (std::size_t m = 0; m < k_; ++m) {
      if (!v[m]) continue;
      if (!placed[m * k_ + l]) return false;
      out = g_.add(out, g_.scale(v[m], c[m * k_ + l]));
    }
    return true;
  }

  // e_i (e_j e_l)
  bool eval_right(std::size_t i, std::size_t j, std::size_t l, const std::vector<std::uint32_t>& c,
                  const std::vector<std::uint8_t>& placed, std::uint32_t& out) const {
    if (!placed[j * k_ + l]) return false;
    const auto& w = g_.coords[c[j * k_ + l]];
    for (std::size_t m = 0; m < k_; ++m) {
      if (!w[m]) continue;
      if (!placed[i * k_ + m]) return false;
      out = g_.add(out, g_.scale(w[m], c[i * k_ + m]));
    }
    return true;
  }

  void dfs(std::size_t t, std::vector<std::uint32_t>& c, std::vector<std::uint8_t>& placed,
           UnitResult& out, std::uint64_t cap) const {
    if (out.aborted) return;
    if (t == p_) {
      if (auto one = g_.unity(c)) out.rings.emplace_back(c, *one);
      return;
    }
    const std::size_t pos = seq_[t];
    for (std::uint32_t v : cands_[pos]) {
      if (++out.nodes > cap) {
        out.aborted = true;
        return;
      }
      c[pos] = v;
      placed[pos] = 1;
      if (consistent(pos, c, placed)) dfs(t + 1, c, placed, out, cap);
      placed[pos] = 0;
      if (out.aborted) return;
    }
  }

  const Group& g_;
  std::size_t k_, p_;
  SearchOrder order_;
  std::vector<std::size_t> seq_;
  std::vector<std::vector<std::uint32_t>> cands_;
};

const char* search_tag(SearchOrder s) { return s == SearchOrder::kForward ? "fwd" : "rev"; }

std::string make_token(std::uint64_t order, SearchOrder s, std::size_t unit) {
  return std::to_string(order) + ":" + search_tag(s) + ":" + std::to_string(unit);
}

std::size_t parse_token(const std::string& token, std::uint64_t order, SearchOrder s) {
  if (token.empty()) return 0;
  const std::string prefix = std::to_string(order) + ":" + search_tag(s) + ":";
  if (token.rfind(prefix, 0) != 0) {
    throw ContractError("resume token '" + token + "' does not belong to order " +
                        std::to_string(order) + " with search order " + search_tag(s));
  }
  try {
    std::size_t used = 0;
    const std::size_t unit = std::stoull(token.substr(prefix.size()), &used);
    if (used != token.size() - prefix.size()) throw std::invalid_argument("trailing");
    return unit;
  } catch (const std::logic_error&) {
    throw ContractError("malformed resume token '" + token + "'");
  }
}

}  // namespace

std::uint64_t AdditiveGroupShape::order() const {
  return std::accumulate(invariant_factors.begin(), invariant_factors.end(), std::uint64_t{1},
                         std::multiplies<>());
}

std::uint64_t automorphism_count(const std::vector<std::uint64_t>& invariant_factors) {
  // Split into primary parts; for Z_{p^e_1} x ... x Z_{p^e_n}, e ascending,
  // |Aut| = prod_k (p^d_k - p^(k-1)) * prod_j (p^e_j)^(n-d_j) * prod_i (p^(e_i-1))^(n-c_i+1)
  // with d_k = max{l : e_l = e_k}, c_k = min{l : e_l = e_k} (1-based).
  std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> primary;
  for (auto f : invariant_factors) {
    for (auto [p, e] : factorize(f)) {
      auto it = std::find_if(primary.begin(), primary.end(), [&](auto& pe) { return pe.first == p; });
      if (it == primary.end()) {
        primary.push_back({p, {e}});
      } else {
        it->second.push_back(e);
      }
    }
  }
  std::uint64_t total = 1;
  auto ipow = [](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
  };
  for (auto& [p, e] : primary) {
    std::sort(e.begin(), e.end());
    const std::size_t n = e.size();
    for (std::size_t k = 1; k <= n; ++k) {
      std::size_t dk = k, ck = k;
      while (dk < n && e[dk] == e[k - 1]) ++dk;
      while (ck > 1 && e[ck - 2] == e[k - 1]) --ck;
      total *= ipow(p, dk) - ipow(p, k - 1);
      total *= ipow(ipow(p, e[k - 1]), n - dk);
      total *= ipow(ipow(p, e[k - 1] - 1), n - ck + 1);
    }
  }
  return total;
}

std::vector<AdditiveGroupShape> abelian_group_shapes(std::uint64_t order) {
  if (order == 0) throw ContractError("abelian groups of order 0");
  std::vector<std::vector<std::uint64_t>> types{{}};
  for (auto [p, e] : factorize(order)) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& t : types) {
      for (const auto& part : partitions(e, e)) {
        std::vector<std::uint64_t> merged(std::max(t.size(), part.size()), 1);
        for (std::size_t i = 0; i < t.size(); ++i) merged[i] *= t[i];
        for (std::size_t i = 0; i < part.size(); ++i) {
          for (unsigned r = 0; r < part[i]; ++r) merged[i] *= p;
        }
        next.push_back(std::move(merged));
      }
    }
    types = std::move(next);
  }
  std::sort(types.begin(), types.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  });
  std::vector<AdditiveGroupShape> out;
  for (auto& t : types) {
    AdditiveGroupShape s;
    Index w = 1;
    for (auto f : t) {
      s.generators.push_back(w);
      w *= f;
    }
    s.automorphism_count = automorphism_count(t);
    s.invariant_factors = std::move(t);
    out.push_back(std::move(s));
  }
  return out;
}

TableRingData CanonicalForm::tables() const { return Group(additive_type).tables(constants, one); }

CanonicalForm canonical_form(const TableRingData& r) {
  if (r.order > kMaxEnumerationOrder) {
    throw ResourceError("canonical form limited to order <= " +
                        std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(r.order));
  }
  CanonicalForm best;
  best.additive_type = type_of(r);
  bool found = false;
  for_each_basis(r, best.additive_type, [&](const std::vector<std::uint32_t>& c, std::uint32_t one) {
    if (!found || std::tie(c, one) < std::tie(best.constants, best.one)) {
      best.constants = c;
      best.one = one;
      found = true;
    }
  });
  if (!found) throw std::logic_error("no additive basis found");
  return best;
}

bool are_isomorphic(const TableRingData& a, const TableRingData& b) {
  if (a.order != b.order) return false;
  if (type_of(a) != type_of(b)) return false;
  const auto ra = TableRing::trusted(a, RingKind::kTable, "lhs");
  const auto rb = TableRing::trusted(b, RingKind::kTable, "rhs");
  if (characteristic(*ra) != characteristic(*rb)) return false;
  if (is_boolean(*ra) != is_boolean(*rb)) return false;
  if (is_commutative(*ra) != is_commutative(*rb)) return false;
  if (unit_group(*ra).count != unit_group(*rb).count) return false;
  if (jacobson_radical(*ra).members.size() != jacobson_radical(*rb).members.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

bool are_isomorphic(const Ring& a, const Ring& b) {
  if (a.order() != b.order()) return false;
  if (a.order() > kMaxEnumerationOrder) {
    throw ResourceError("isomorphism test limited to order <= " +
                        std::to_string(kMaxEnumerationOrder));
  }
  return are_isomorphic(tabulate(a), tabulate(b));
}

EnumerationResult enumerate_unital_rings(std::uint64_t order, const EnumerationOptions& options) {
  if (order == 0 || order > kMaxEnumerationOrder) {
    throw ContractError("ring enumeration supports orders 1.." +
                        std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(order));
  }
  const auto shapes = abelian_group_shapes(order);
  std::vector<Group> groups;
  std::vector<Search> searches;
  groups.reserve(shapes.size());
  for (const auto& s : shapes) groups.emplace_back(s.invariant_factors);
  for (const auto& g : groups) searches.emplace_back(g, options.search);

  std::vector<Unit> units;
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    const auto& first = searches[s].first_candidates();
    if (groups[s].k == 0) {
      units.push_back({s, std::nullopt});
      continue;
    }
    for (auto v : first) units.push_back({s, v});
  }

  EnumerationResult result;
  result.units_total = units.size();
  const std::size_t start = parse_token(options.resume_token, order, options.search);
  if (start > units.size()) throw ContractError("resume token past the end of the search");

  std::uint64_t budget = options.node_budget.value_or(~std::uint64_t{0});
  if (!options.node_budget && order > kMandatoryEnumerationOrder) budget = 0;

  std::vector<UnitResult> done(units.size());
  if (budget > 0) {
    if (options.threads > 0) omp_set_num_threads(options.threads);
    const auto count = static_cast<std::int64_t>(units.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t u = static_cast<std::int64_t>(start); u < count; ++u) {
      done[u] = searches[units[u].shape].run(units[u].first, budget);
    }
  }

  // Accept whole units in order while the cumulative node count fits.
  std::vector<std::pair<std::size_t, std::pair<std::vector<std::uint32_t>, std::uint32_t>>> raw;
  std::size_t u = start;
  for (; u < units.size(); ++u) {
    if (budget == 0 || done[u].aborted || result.nodes + done[u].nodes > budget) break;
    result.nodes += done[u].nodes;
    for (auto& ring : done[u].rings) raw.emplace_back(units[u].shape, std::move(ring));
  }
  result.units_done = u - start;
  if (u < units.size()) {
    result.complete = false;
    result.resume_token = make_token(order, options.search, u);
  }
  std::sort(raw.begin(), raw.end());

  if (!options.up_to_iso) {
    for (auto& [shape, ring] : raw) {
      auto table = groups[shape].tables(ring.first, ring.second);
      make_table_ring(table);  // exhaustive axiom check; throws on a search bug
      result.rings.push_back(std::move(table));
      result.shape_of.push_back(shape);
    }
    return result;
  }

  // Up to isomorphism: each new ring contributes its whole relabeling orbit
  // to `seen`; the orbit minimum is the canonical form.
  std::vector<std::pair<CanonicalForm, std::size_t>> classes;
  std::vector<std::set<std::vector<std::uint32_t>>> seen(shapes.size());
  for (auto& [shape, ring] : raw) {
    if (seen[shape].count(ring.first)) continue;
    const auto table = groups[shape].tables(ring.first, ring.second);
    make_table_ring(table);
    CanonicalForm form;
    form.additive_type = shapes[shape].invariant_factors;
    bool first = true;
    for_each_basis(table, form.additive_type, [&](const std::vector<std::uint32_t>& c, std::uint32_t one) {
      seen[shape].insert(c);
      if (first || std::tie(c, one) < std::tie(form.constants, form.one)) {
        form.constants = c;
        form.one = one;
        first = false;
      }
    });
    classes.emplace_back(std::move(form), shape);
  }
  std::sort(classes.begin(), classes.end());
  for (auto& [form, shape] : classes) {
    result.rings.push_back(form.tables());
    result.shape_of.push_back(shape);
  }
  return result;
}

}  // namespace finring
