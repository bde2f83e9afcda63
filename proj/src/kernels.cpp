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

#include "finring/kernels.hpp"

#include <omp.h>

#include <algorithm>

namespace finring::kernels {

namespace {

void set_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

UnitScan finish_scan(const Ring& r, std::vector<std::uint8_t> bitmap) {
  UnitScan out;
  out.is_unit = std::move(bitmap);
  for (Index x = 0; x < r.order(); ++x) {
    if (out.is_unit[x]) {
      out.units.push_back(x);
      out.sum = r.add(out.sum, x);
    }
  }
  return out;
}

// Does a pass the radical test?
bool in_radical(const RadicalInput& in, std::uint32_t a, std::vector<std::uint8_t>& left_seen,
                std::vector<std::uint8_t>& seen, std::vector<std::uint32_t>& left) {
  const std::uint32_t n = in.order;
  if (!in.is_unit[in.one_minus[a]]) return false;
  std::fill(left_seen.begin(), left_seen.end(), 0);
  std::fill(seen.begin(), seen.end(), 0);
  left.clear();
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t xa = in.mul[std::size_t{x} * n + a];
    if (!left_seen[xa]) {
      left_seen[xa] = 1;
      left.push_back(xa);
    }
  }
  for (std::uint32_t l : left) {
    const std::uint32_t* row = &in.mul[std::size_t{l} * n];
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t v = row[y];
      if (seen[v]) continue;
      seen[v] = 1;
      if (!in.is_unit[in.one_minus[v]]) return false;
    }
  }
  return true;
}

struct GlWalk {
  const MatrixRing& m;
  std::size_t n;
  Index q;
  Index vectors;  // q^n
  std::vector<std::vector<Index>> columns_of;  // vector index -> components

  explicit GlWalk(const MatrixRing& ring)
      : m(ring), n(ring.dim()), q(ring.base().order()), vectors(1) {
    for (std::size_t i = 0; i < n; ++i) vectors *= q;
    columns_of.resize(vectors);
    for (Index v = 0; v < vectors; ++v) {
      Index t = v;
      columns_of[v].resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        columns_of[v][i] = t % q;
        t /= q;
      }
    }
  }

  Index vadd(Index a, Index b) const {
    Index out = 0, w = 1;
    for (std::size_t i = 0; i < n; ++i, w *= q) {
      out += m.arith().badd(a % q, b % q) * w;
      a /= q;
      b /= q;
    }
    return out;
  }

  Index vscale(Index t, Index v) const {
    Index out = 0, w = 1;
    for (std::size_t i = 0; i < n; ++i, w *= q) {
      out += m.arith().bmul(t, v % q) * w;
      v /= q;
    }
    return out;
  }

  // Span of `span` together with c.
  std::vector<std::uint8_t> extend(const std::vector<std::uint8_t>& span, Index c) const {
    std::vector<std::uint8_t> out(vectors, 0);
    for (Index s = 0; s < vectors; ++s) {
      if (!span[s]) continue;
      for (Index t = 0; t < q; ++t) out[vadd(s, vscale(t, c))] = 1;
    }
    return out;
  }

  // Per-entry running sums (row-major), column choices in `chosen`.
  void walk(std::size_t col, const std::vector<std::uint8_t>& span, std::vector<Index>& chosen,
            std::vector<Index>& sums, std::uint64_t& count) const {
    if (col == n) {
      ++count;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& comp = columns_of[chosen[j]];
        for (std::size_t i = 0; i < n; ++i) {
          sums[i * n + j] = m.arith().badd(sums[i * n + j], comp[i]);
        }
      }
      return;
    }
    for (Index c = 0; c < vectors; ++c) {
      if (span[c]) continue;
      chosen[col] = c;
      if (col + 1 == n) {
        walk(col + 1, span, chosen, sums, count);
      } else {
        walk(col + 1, extend(span, c), chosen, sums, count);
      }
    }
  }

  // All matrices with first column c.
  void walk_class(Index c, std::vector<Index>& sums, std::uint64_t& count) const {
    std::vector<std::uint8_t> zero_span(vectors, 0);
    zero_span[0] = 1;
    std::vector<Index> chosen(n, 0);
    chosen[0] = c;
    walk(1, extend(zero_span, c), chosen, sums, count);
  }

  Index encode_sum(const std::vector<Index>& sums) const { return m.encode(sums); }
};

void require_field_base(const MatrixRing& m) {
  if (!m.base().is_field()) {
    throw ContractError("GL walk needs a field base, got " + m.base().name());
  }
}

}  // namespace

UnitScan scan_units_serial(const Ring& r) {
  const Index n = r.order();
  std::vector<std::uint8_t> bitmap(n, 0);
  for (Index x = 0; x < n; ++x) bitmap[x] = r.inverse(x).has_value();
  return finish_scan(r, std::move(bitmap));
}

UnitScan scan_units_parallel(const Ring& r, int threads) {
  set_threads(threads);
  const auto n = static_cast<std::int64_t>(r.order());
  std::vector<std::uint8_t> bitmap(n, 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t x = 0; x < n; ++x) {
    bitmap[x] = r.inverse(static_cast<Index>(x)).has_value();
  }
  return finish_scan(r, std::move(bitmap));
}

std::vector<std::uint32_t> mul_table_serial(const Ring& r) {
  const Index n = r.order();
  std::vector<std::uint32_t> t(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) t[a * n + b] = static_cast<std::uint32_t>(r.mul(a, b));
  }
  return t;
}

std::vector<std::uint32_t> mul_table_parallel(const Ring& r, int threads) {
  set_threads(threads);
  const auto n = static_cast<std::int64_t>(r.order());
  std::vector<std::uint32_t> t(static_cast<std::size_t>(n * n));
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      t[a * n + b] = static_cast<std::uint32_t>(r.mul(static_cast<Index>(a), static_cast<Index>(b)));
    }
  }
  return t;
}

std::vector<Index> radical_serial(const RadicalInput& in) {
  std::vector<std::uint8_t> left_seen(in.order), seen(in.order);
  std::vector<std::uint32_t> left;
  std::vector<Index> members;
  for (std::uint32_t a = 0; a < in.order; ++a) {
    if (in_radical(in, a, left_seen, seen, left)) members.push_back(a);
  }
  return members;
}

std::vector<Index> radical_parallel(const RadicalInput& in, int threads) {
  set_threads(threads);
  const auto n = static_cast<std::int64_t>(in.order);
  std::vector<std::uint8_t> flag(n, 0);
#pragma omp parallel
  {
    std::vector<std::uint8_t> left_seen(in.order), seen(in.order);
    std::vector<std::uint32_t> left;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t a = 0; a < n; ++a) {
      flag[a] = in_radical(in, static_cast<std::uint32_t>(a), left_seen, seen, left);
    }
  }
  std::vector<Index> members;
  for (std::int64_t a = 0; a < n; ++a) {
    if (flag[a]) members.push_back(static_cast<Index>(a));
  }
  return members;
}

GlTally gl_tally_serial(const MatrixRing& m) {
  require_field_base(m);
  const GlWalk w(m);
  GlTally out;
  std::vector<Index> sums(w.n * w.n, 0);
  for (Index c = 1; c < w.vectors; ++c) {
    std::uint64_t count = 0;
    w.walk_class(c, sums, count);
    out.first_column_classes[c] = count;
    out.count += count;
  }
  out.sum = w.encode_sum(sums);
  return out;
}

GlTally gl_tally_parallel(const MatrixRing& m, int threads) {
  require_field_base(m);
  set_threads(threads);
  const GlWalk w(m);
  const auto classes = static_cast<std::int64_t>(w.vectors) - 1;
  std::vector<std::uint64_t> counts(classes, 0);
  std::vector<std::vector<Index>> partial(classes);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < classes; ++k) {
    std::vector<Index> sums(w.n * w.n, 0);
    w.walk_class(static_cast<Index>(k + 1), sums, counts[k]);
    partial[k] = std::move(sums);
  }
  // Deterministic reduction in first-column order.
  GlTally out;
  std::vector<Index> sums(w.n * w.n, 0);
  for (std::int64_t k = 0; k < classes; ++k) {
    out.first_column_classes[static_cast<Index>(k + 1)] = counts[k];
    out.count += counts[k];
    for (std::size_t e = 0; e < sums.size(); ++e) sums[e] = m.arith().badd(sums[e], partial[k][e]);
  }
  out.sum = w.encode_sum(sums);
  return out;
}

}  // namespace finring::kernels
