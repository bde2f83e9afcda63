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

#include "finring/quotient.hpp"

#include <algorithm>

namespace finring {

namespace {

using W = std::vector<std::size_t>;

}  // namespace

void verify_ideal(const Ring& r, const std::vector<Index>& ideal) {
  std::vector<bool> member(r.order(), false);
  for (Index a : ideal) {
    r.check(a);
    member[a] = true;
  }
  if (!member[r.zero()]) throw AxiomError("ideal contains zero", W{});
  for (Index a : ideal) {
    if (!member[r.neg(a)]) throw AxiomError("ideal closed under negation", W{a});
    for (Index b : ideal) {
      if (!member[r.add(a, b)]) throw AxiomError("ideal closed under addition", W{a, b});
    }
  }
  for (Index x = 0; x < r.order(); ++x) {
    for (Index a : ideal) {
      if (!member[r.mul(x, a)]) throw AxiomError("ideal absorbs left multiplication", W{x, a});
      if (!member[r.mul(a, x)]) throw AxiomError("ideal absorbs right multiplication", W{a, x});
    }
  }
}

std::shared_ptr<const TableRing> quotient_ring(const RingPtr& r, std::vector<Index> ideal) {
  if (r->order() > kEagerOrder) {
    throw ResourceError("quotient of " + r->name() + " exceeds the eager order cap");
  }
  std::sort(ideal.begin(), ideal.end());
  ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
  verify_ideal(*r, ideal);

  // Ascending scan: the first unassigned element is its coset's minimum.
  const Index n = r->order();
  constexpr Index kUnassigned = ~Index{0};
  std::vector<Index> coset_of(n, kUnassigned);
  std::vector<Index> reps;
  for (Index x = 0; x < n; ++x) {
    if (coset_of[x] != kUnassigned) continue;
    for (Index a : ideal) coset_of[r->add(x, a)] = reps.size();
    reps.push_back(x);
  }

  const auto q = static_cast<std::uint32_t>(reps.size());
  TableRingData d;
  d.order = q;
  d.zero = 0;
  d.one = static_cast<std::uint32_t>(coset_of[r->one()]);
  d.add_table.resize(std::size_t{q} * q);
  d.mul_table.resize(std::size_t{q} * q);
  for (std::uint32_t i = 0; i < q; ++i) {
    for (std::uint32_t j = 0; j < q; ++j) {
      d.add_table[i * q + j] = static_cast<std::uint32_t>(coset_of[r->add(reps[i], reps[j])]);
      d.mul_table[i * q + j] = static_cast<std::uint32_t>(coset_of[r->mul(reps[i], reps[j])]);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(q);
  for (Index rep : reps) labels.push_back(r->pretty(rep) + "+I");
  return TableRing::trusted(std::move(d), RingKind::kQuotient, r->name() + "/I", std::move(labels));
}

}  // namespace finring
