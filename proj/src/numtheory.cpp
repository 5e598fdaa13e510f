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

#include "lpsets/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lpsets {

bool is_prime(std::uint64_t m) noexcept {
    if (m < 2) return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

Factorization factorize(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("factorize: m must be positive");
    Factorization out;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        unsigned e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
    std::vector<std::uint64_t> out{1};
    for (auto [prime, e] : factorize(m)) {
        const std::size_t count = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t euler_phi(std::uint64_t m) {
    std::uint64_t phi = m;
    for (auto [prime, e] : factorize(m)) phi = phi / prime * (prime - 1);
    return phi;
}

std::uint64_t divisor_sigma(std::uint64_t m) {
    std::uint64_t s = 1;
    for (auto [prime, e] : factorize(m)) {
        std::uint64_t term = 1, pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= prime;
            term += pk;
        }
        s *= term;
    }
    return s;
}

NumberTheory number_theory(std::uint64_t m) {
    NumberTheory nt;
    nt.factorization = factorize(m);
    nt.divisors = divisors(m);
    nt.phi = euler_phi(m);
    nt.sigma = divisor_sigma(m);
    return nt;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && out > UINT64_MAX / base) throw std::overflow_error("ipow: overflow");
        out *= base;
    }
    return out;
}

unsigned two_adic_valuation(std::uint64_t b) {
    if (b == 0) throw std::invalid_argument("two_adic_valuation: v(0) is undefined");
    unsigned v = 0;
    while ((b & 1) == 0) {
        b >>= 1;
        ++v;
    }
    return v;
}

std::uint64_t gcd_power(std::uint64_t p, unsigned i, unsigned j) {
    if (!is_prime(p)) throw std::invalid_argument("gcd_power: p must be prime");
    if (i == 0) throw std::invalid_argument("gcd_power: i must be at least 1");
    if (j == 0) throw std::invalid_argument("gcd_power: j must be at least 1");
    if (two_adic_valuation(i) < two_adic_valuation(j)) return ipow(p, std::gcd(i, j)) + 1;
    return p == 2 ? 1 : 2;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) result = mulmod(result, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 0;
    __int128 old_r = static_cast<__int128>(a % m), r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 quotient = old_r / r;
        std::swap(old_r, r);
        r -= quotient * old_r;
        std::swap(old_s, s);
        s -= quotient * old_s;
    }
    if (old_r != 1) throw std::invalid_argument("mod_inverse: not invertible");
    __int128 result = old_s % static_cast<__int128>(m);
    if (result < 0) result += m;
    return static_cast<std::uint64_t>(result);
}

}  // namespace lpsets
