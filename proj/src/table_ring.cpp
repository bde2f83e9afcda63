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

#include "finring/table_ring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "finring/number_theory.hpp"

namespace finring {

namespace {

using W = std::vector<std::size_t>;

std::string join_type(const std::vector<std::uint64_t>& type) {
  std::string out;
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(type[i]);
  }
  return out;
}

void check_shape(const TableRingData& d) {
  const std::uint64_t n = d.order;
  if (n == 0) throw ConstructionError("table ring of order 0");
  if (n > kEagerOrder) {
    throw ConstructionError("table ring of order " + std::to_string(n) + " exceeds " +
                            std::to_string(kEagerOrder));
  }
  if (d.add_table.size() != n * n || d.mul_table.size() != n * n) {
    throw ConstructionError("tables must be order x order");
  }
  for (auto v : d.add_table) {
    if (v >= n) throw ConstructionError("addition table entry " + std::to_string(v) + " out of range");
  }
  for (auto v : d.mul_table) {
    if (v >= n) {
      throw ConstructionError("multiplication table entry " + std::to_string(v) + " out of range");
    }
  }
  if (d.zero >= n || d.one >= n) throw ConstructionError("zero/one index out of range");
}

// Returns the negation table, throwing on the first failing additive axiom.
std::vector<std::uint32_t> check_additive(const TableRingData& d) {
  const std::uint32_t n = d.order;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (d.add(d.zero, x) != x || d.add(x, d.zero) != x) throw AxiomError("additive identity", W{x});
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x + 1; y < n; ++y) {
      if (d.add(x, y) != d.add(y, x)) throw AxiomError("additive commutativity", W{x, y});
    }
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t xy = d.add(x, y);
      for (std::uint32_t z = 0; z < n; ++z) {
        if (d.add(xy, z) != d.add(x, d.add(y, z))) {
          throw AxiomError("additive associativity", W{x, y, z});
        }
      }
    }
  }
  std::vector<std::uint32_t> neg(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t y = 0;
    while (y < n && d.add(x, y) != d.zero) ++y;
    if (y == n) throw AxiomError("additive inverse", W{x});
    neg[x] = y;
  }
  return neg;
}

void check_multiplicative(const TableRingData& d) {
  const std::uint32_t n = d.order;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t xy = d.mul(x, y);
      for (std::uint32_t z = 0; z < n; ++z) {
        if (d.mul(xy, z) != d.mul(x, d.mul(y, z))) {
          throw AxiomError("multiplicative associativity", W{x, y, z});
        }
      }
    }
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      for (std::uint32_t z = 0; z < n; ++z) {
        if (d.mul(x, d.add(y, z)) != d.add(d.mul(x, y), d.mul(x, z))) {
          throw AxiomError("left distributivity", W{x, y, z});
        }
        if (d.mul(d.add(y, z), x) != d.add(d.mul(y, x), d.mul(z, x))) {
          throw AxiomError("right distributivity", W{x, y, z});
        }
      }
    }
  }
}

bool is_unity(const TableRingData& d, std::uint32_t u) {
  for (std::uint32_t x = 0; x < d.order; ++x) {
    if (d.mul(u, x) != x || d.mul(x, u) != x) return false;
  }
  return true;
}

void check_unity(const TableRingData& d) {
  if (is_unity(d, d.one)) return;
  for (std::uint32_t u = 0; u < d.order; ++u) {
    if (is_unity(d, u)) {
      throw AxiomError("declared one is not the unity (unity is " + std::to_string(u) + ")",
                       W{d.one});
    }
  }
  throw AxiomError("no unity", W{});
}

std::vector<std::uint32_t> parse_row(std::string_view line, std::size_t expected,
                                     std::size_t line_no) {
  std::vector<std::uint32_t> out;
  out.reserve(expected);
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t end = std::min(line.find(' ', pos), line.size());
    const std::string_view tok = line.substr(pos, end - pos);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ConstructionError("table format: bad entry '" + std::string(tok) + "' on line " +
                              std::to_string(line_no));
    }
    out.push_back(v);
    pos = end + 1;
  }
  if (out.size() != expected) {
    throw ConstructionError("table format: line " + std::to_string(line_no) + " has " +
                            std::to_string(out.size()) + " entries, expected " +
                            std::to_string(expected));
  }
  return out;
}

// Reads one block starting at line `pos`; advances `pos` past it.
TableRingData parse_block(const std::vector<std::string_view>& lines, std::size_t& pos) {
  if (pos >= lines.size()) throw ConstructionError("table format: missing header");
  const std::string_view header = lines[pos];
  std::istringstream in{std::string(header)};
  std::uint64_t order = 0, zero = 0, one = 0;
  std::string type_text, extra;
  if (!(in >> order >> zero >> one >> type_text) || (in >> extra)) {
    throw ConstructionError("table format: bad header '" + std::string(header) + "'");
  }
  if (order == 0 || order > kEagerOrder) {
    throw ConstructionError("table format: order " + std::to_string(order) + " out of range");
  }
  TableRingData d;
  d.order = static_cast<std::uint32_t>(order);
  d.zero = static_cast<std::uint32_t>(zero);
  d.one = static_cast<std::uint32_t>(one);
  std::string spaced = type_text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  // The trivial group is written as "1".
  if (type_text != "1") {
    for (auto factor : parse_row(spaced, std::count(type_text.begin(), type_text.end(), ',') + 1, pos + 1)) {
      d.additive_type.push_back(factor);
    }
  }
  ++pos;
  auto read_table = [&](std::vector<std::uint32_t>& table) {
    table.reserve(order * order);
    for (std::uint64_t r = 0; r < order; ++r, ++pos) {
      if (pos >= lines.size()) throw ConstructionError("table format: truncated table");
      auto row = parse_row(lines[pos], order, pos + 1);
      table.insert(table.end(), row.begin(), row.end());
    }
  };
  read_table(d.add_table);
  read_table(d.mul_table);
  return d;
}

}  // namespace

std::vector<std::uint64_t> additive_type_of(std::uint32_t order,
                                            const std::vector<std::uint32_t>& add_table,
                                            std::uint32_t zero) {
  // Additive order of every element.
  std::vector<std::uint64_t> ord(order, 0);
  for (std::uint32_t x = 0; x < order; ++x) {
    std::uint32_t acc = x;
    std::uint64_t k = 1;
    while (acc != zero) {
      acc = add_table[static_cast<std::size_t>(acc) * order + x];
      if (++k > order) throw ConstructionError("addition table is not a finite group");
    }
    ord[x] = k;
  }
  // Per prime p, the number of cyclic factors of order >= p^k is
  // log_p(|G[p^k]| / |G[p^(k-1)]|).
  std::vector<std::vector<unsigned>> exps;  // descending exponents per prime
  std::vector<std::uint64_t> primes;
  for (auto [p, e] : factorize(order)) {
    std::vector<std::uint64_t> killed(e + 1, 0);
    std::uint64_t pk = 1;
    for (unsigned k = 0; k <= e; ++k, pk *= p) {
      for (auto o : ord) killed[k] += (pk % o == 0);
    }
    std::vector<unsigned> at_least(e + 2, 0);
    for (unsigned k = 1; k <= e; ++k) {
      std::uint64_t ratio = killed[k] / killed[k - 1];
      unsigned m = 0;
      while (ratio > 1) {
        ratio /= p;
        ++m;
      }
      at_least[k] = m;
    }
    std::vector<unsigned> parts;
    for (unsigned k = e; k >= 1; --k) {
      for (unsigned c = at_least[k + 1]; c < at_least[k]; ++c) parts.push_back(k);
    }
    primes.push_back(p);
    exps.push_back(parts);
  }
  std::size_t len = 0;
  for (const auto& v : exps) len = std::max(len, v.size());
  std::vector<std::uint64_t> type(len, 1);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = 0; j < exps[i].size(); ++j) {
      for (unsigned t = 0; t < exps[i][j]; ++t) type[j] *= primes[i];
    }
  }
  return type;
}

TableRing::TableRing(TableRingData data, RingKind kind, std::string name,
                     std::vector<std::string> labels)
    : Ring(kind, data.order, data.one),
      data_(std::move(data)),
      name_(std::move(name)),
      labels_(std::move(labels)) {
  const std::uint32_t n = data_.order;
  neg_.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (data_.add(x, y) == 0) {
        neg_[x] = y;
        break;
      }
    }
  }
}

std::string TableRing::pretty(Index a) const {
  if (a < labels_.size()) return labels_[a];
  return std::to_string(a);
}

std::shared_ptr<const TableRing> TableRing::trusted(TableRingData data, RingKind kind,
                                                    std::string name,
                                                    std::vector<std::string> labels) {
  if (data.additive_type.empty()) data.additive_type = additive_type_of(data.order, data.add_table, 0);
  return std::shared_ptr<const TableRing>(
      new TableRing(std::move(data), kind, std::move(name), std::move(labels)));
}

std::shared_ptr<const TableRing> make_table_ring(TableRingData data) {
  check_shape(data);
  if (data.zero != 0) {
    throw ConstructionError("zero must be element index 0, got " + std::to_string(data.zero));
  }
  check_additive(data);
  check_multiplicative(data);
  check_unity(data);
  const auto actual = additive_type_of(data.order, data.add_table, data.zero);
  if (data.additive_type.empty()) {
    data.additive_type = actual;
  } else if (data.additive_type != actual) {
    throw ConstructionError("declared additive type " + join_type(data.additive_type) +
                            " does not match the addition table (" + join_type(actual) + ")");
  }
  const std::string name = "table ring of order " + std::to_string(data.order);
  return TableRing::trusted(std::move(data), RingKind::kTable, name);
}

TableRingData tabulate(const Ring& ring) {
  const Index n = ring.order();
  if (n > kEagerOrder) {
    throw ResourceError("refusing to tabulate " + ring.name() + " of order " + std::to_string(n) +
                        " (eager cap " + std::to_string(kEagerOrder) + ")");
  }
  TableRingData d;
  d.order = static_cast<std::uint32_t>(n);
  d.zero = 0;
  d.one = static_cast<std::uint32_t>(ring.one());
  d.add_table.resize(n * n);
  d.mul_table.resize(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      d.add_table[a * n + b] = static_cast<std::uint32_t>(ring.add(a, b));
      d.mul_table[a * n + b] = static_cast<std::uint32_t>(ring.mul(a, b));
    }
  }
  d.additive_type = additive_type_of(d.order, d.add_table, 0);
  return d;
}

std::string serialize(const TableRingData& d) {
  std::string out;
  out += std::to_string(d.order) + ' ' + std::to_string(d.zero) + ' ' + std::to_string(d.one) +
         ' ' + (d.additive_type.empty() ? std::string("1") : join_type(d.additive_type)) + '\n';
  for (const auto* table : {&d.add_table, &d.mul_table}) {
    for (std::uint32_t r = 0; r < d.order; ++r) {
      for (std::uint32_t c = 0; c < d.order; ++c) {
        if (c) out += ' ';
        out += std::to_string((*table)[r * d.order + c]);
      }
      out += '\n';
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return lines;
}

}  // namespace

TableRingData parse_table_ring(std::string_view text) {
  auto all = parse_table_rings(text);
  if (all.size() != 1) {
    throw ConstructionError("expected exactly one table ring, found " + std::to_string(all.size()));
  }
  return std::move(all.front());
}

std::vector<TableRingData> parse_table_rings(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<TableRingData> out;
  std::size_t pos = 0;
  while (pos < lines.size()) out.push_back(parse_block(lines, pos));
  return out;
}

}  // namespace finring
