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

#ifndef FINRING_NUMBER_THEORY_HPP_
#define FINRING_NUMBER_THEORY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace finring {

bool is_prime(std::uint64_t n);

// Prime factorization by trial division, primes ascending with multiplicity.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// "12 = 2^2·3" style rendering of a factorization.
std::string format_factorization(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  unsigned s;
};

// {p, s} with q = p^s, or nullopt when q is not a prime power (q = 1 included).
std::optional<PrimePower> as_prime_power(std::uint64_t q);

// Inverse of a modulo n when gcd(a, n) = 1.
std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t n);

// Saturating integer power; nullopt on overflow past `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp, std::uint64_t limit);

}  // namespace finring

#endif  // FINRING_NUMBER_THEORY_HPP_
