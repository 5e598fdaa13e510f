/*
   Copyright 2026 The lpsets Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LPSETS_NUMTHEORY_HPP
#define LPSETS_NUMTHEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace lpsets {

using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

bool is_prime(std::uint64_t m) noexcept;

/// Trial division; primes ascending.
Factorization factorize(std::uint64_t m);

/// Sorted divisors of m >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t m);

std::uint64_t euler_phi(std::uint64_t m);

/// Sum of divisors.
std::uint64_t divisor_sigma(std::uint64_t m);

struct NumberTheory {
    std::uint64_t phi = 0;
    std::uint64_t sigma = 0;
    std::vector<std::uint64_t> divisors;
    Factorization factorization;
};

NumberTheory number_theory(std::uint64_t m);

/// base^exp; throws std::overflow_error when the result does not fit 64 bits.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Largest v with 2^v | b; b > 0.
unsigned two_adic_valuation(std::uint64_t b);

/**
 * gcd(p^i + 1, p^j - 1) by the 2-adic case split:
 * p^{gcd(i,j)} + 1 when v(i) < v(j), otherwise 1 for p = 2 and 2 for odd p.
 * Requires i >= 1 and j >= 1 (v(0) is undefined).
 */
std::uint64_t gcd_power(std::uint64_t p, unsigned i, unsigned j);

/// Modular inverse of a mod m (gcd(a, m) = 1), m >= 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept;

}  // namespace lpsets

#endif  // LPSETS_NUMTHEORY_HPP
