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

#include "finring/number_theory.hpp"

#include <numeric>
#include <sstream>

namespace finring {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::string format_factorization(std::uint64_t n) {
  std::ostringstream out;
  out << n << " = ";
  auto f = factorize(n);
  if (f.empty()) {
    out << n;
    return out.str();
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out << "·";
    out << f[i].first;
    if (f[i].second > 1) out << '^' << f[i].second;
  }
  return out.str();
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{f[0].first, f[0].second};
}

std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 0;
  std::int64_t old_r = static_cast<std::int64_t>(a % n), r = static_cast<std::int64_t>(n);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  std::int64_t m = static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(((old_s % m) + m) % m);
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp, std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && acc > limit / base) return std::nullopt;
    acc *= base;
    if (acc > limit) return std::nullopt;
  }
  return acc;
}

}  // namespace finring
