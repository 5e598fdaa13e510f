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

#include "lpsets/census.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lpsets/linset.hpp"
#include "lpsets/numtheory.hpp"

namespace lpsets {

namespace {

BigInt bpow(std::uint64_t p, unsigned e) { return boost::multiprecision::pow(BigInt(p), e); }

/// Σ over squarefree D built from `primes`: μ(D) p^{m/D}.
BigInt mobius_sum(std::uint64_t p, unsigned m, const std::vector<std::uint64_t>& primes) {
    BigInt total = 0;
    const std::size_t l = primes.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
        std::uint64_t D = 1;
        int parity = 0;
        for (std::size_t i = 0; i < l; ++i)
            if (mask >> i & 1) D *= primes[i], ++parity;
        const BigInt term = bpow(p, static_cast<unsigned>(m / D));
        if (parity % 2) total -= term;
        else total += term;
    }
    return total;
}

bool power_of_two(unsigned m) { return m != 0 && (m & (m - 1)) == 0; }

void require_census(std::uint64_t p, unsigned r, unsigned n, const char* who) {
    if (!is_prime(p) || r == 0) throw std::invalid_argument(std::string(who) + ": p must be prime and r >= 1");
    if (p == 2 && r == 1) throw QEqualsTwo();
    if (n < 3) throw std::invalid_argument(std::string(who) + ": n must be at least 3");
}

Rational epsilon_of(std::uint64_t p, unsigned n) {
    if (p == 2) return 0;
    return n % 2 ? Rational(p - 1, 2) : Rational(p - 3, 2);
}

QuadSurd hp(std::uint64_t p, std::int64_t twice_exponent) { return QuadSurd::half_power(p, twice_exponent); }

Rational pow_sum(std::uint64_t p, unsigned count) {
    Rational s = 0;
    for (unsigned i = 1; i <= count; ++i) s += Rational(bpow(p, 1u << (i - 1)));
    return s;
}

}  // namespace

BigInt f_size(std::uint64_t p, unsigned m) {
    if (m == 0) throw std::invalid_argument("f_size: m must be positive");
    std::vector<std::uint64_t> primes;
    for (auto [q, e] : factorize(m)) primes.push_back(q);
    return mobius_sum(p, m, primes);
}

BigInt k_size(std::uint64_t p, unsigned m) {
    if (m == 0) throw std::invalid_argument("k_size: m must be positive");
    const int odd_p = p % 2;
    if (m == 1) return odd_p ? 2 : 1;
    if (m % 2) return 0;
    if (power_of_two(m)) return bpow(p, m / 2) - (odd_p ? 1 : 0);
    std::vector<std::uint64_t> odd_primes;
    for (auto [q, e] : factorize(m))
        if (q != 2) odd_primes.push_back(q);
    return mobius_sum(p, m / 2, odd_primes);
}

std::optional<BigInt> CensusReport::oracle_lambda() const { return brute_force_lambda ? brute_force_lambda : orbit_lambda; }

bool CensusReport::verified() const {
    if (!orbit_lambda && !brute_force_lambda) return false;
    if (orbit_lambda && *orbit_lambda != lambda) return false;
    if (brute_force_lambda && *brute_force_lambda != lambda) return false;
    return true;
}

CensusReport lambda_closed(std::uint64_t p, unsigned r, unsigned n) {
    require_census(p, r, n, "lambda_closed");
    CensusReport rep;
    rep.p = p;
    rep.r = r;
    rep.n = n;
    rep.epsilon = epsilon_of(p, n);

    Rational total = rep.epsilon;
    for (auto d : divisors(r)) {
        if (d == 1) continue;
        CensusTerm t{static_cast<unsigned>(d), f_size(p, d), k_size(p, d), true, 0};
        t.contribution = Rational(t.f + t.k) / Rational(2 * d);
        total += t.contribution;
        rep.terms.push_back(std::move(t));
    }
    if (n % 2 == 0) {
        for (auto d : divisors(2ull * r)) {
            if (r % d == 0) continue;
            CensusTerm t{static_cast<unsigned>(d), f_size(p, d), k_size(p, d), false, 0};
            t.contribution = Rational(t.f - t.k) / Rational(2 * d);
            total += t.contribution;
            rep.terms.push_back(std::move(t));
        }
    }
    rep.orbit_total = total;
    const Rational lambda = total * Rational(euler_phi(n), 2);
    if (denominator(lambda) != 1 || lambda < 0)
        throw std::logic_error("lambda_closed: the count is not a nonnegative integer");
    rep.lambda = numerator(lambda);

    if (r > 1) {
        rep.bounds = lambda_bounds(p, r, n);
        const QuadSurd bounded(p, total - rep.epsilon);
        rep.sandwich = compare(rep.bounds->lower, bounded) < 0 && compare(bounded, rep.bounds->upper) < 0;
    }
    if (r >= 3) rep.gronwall = gronwall_ratio(r);
    if (r == 1) {
        const Rational shortcut = rep.epsilon * Rational(euler_phi(n), 2);
        if (shortcut != lambda) {
            std::ostringstream os;
            os << "r = 1 shortcut eps*phi(n)/2 = " << shortcut << " differs from the divisor sum " << rep.lambda;
            rep.notes.push_back(os.str());
        }
    }
    return rep;
}

std::uint64_t lambda_orbit_oracle(std::uint64_t p, unsigned r, unsigned n, std::uint64_t ceiling) {
    require_census(p, r, n, "lambda_orbit_oracle");
    const unsigned w = n % 2 ? 1 : 2;
    const unsigned m = r * w;
    if (m > 40 || ipow(p, m) > ceiling) throw CeilingExceeded("lambda_orbit_oracle: p^{wr} exceeds the ceiling");
    const FieldPtr field = FieldTower::build(p, r, w);
    const FieldTower& F = *field;
    std::vector<std::uint8_t> seen(F.order(), 0);
    std::uint64_t orbits = 0;
    std::vector<Elem> stack;
    for (std::uint64_t v = 1; v < F.order(); ++v) {
        if (seen[v] || F.norm_q(Elem{v}) == F.one()) continue;
        ++orbits;
        seen[v] = 1;
        stack.assign(1, Elem{v});
        while (!stack.empty()) {
            const Elem x = stack.back();
            stack.pop_back();
            for (const Elem y : {F.frobenius(x, 1), F.inv(x)}) {
                if (seen[y.v]) continue;
                seen[y.v] = 1;
                stack.push_back(y);
            }
        }
    }
    return orbits;
}

std::uint64_t lambda_brute_force(std::uint64_t p, unsigned r, unsigned n, const BruteForceOptions& options) {
    require_census(p, r, n, "lambda_brute_force");
    const unsigned m = r * n;
    if (m > 40 || ipow(p, m) > options.ceiling)
        throw CeilingExceeded("lambda_brute_force: p^{rn} exceeds the ceiling");
    const FieldPtr field = FieldTower::build(p, r, n);
    std::vector<LinearSet> sets;
    for (unsigned s = 1; 2 * s < n; ++s) {
        if (std::gcd(s, n) != 1) continue;
        for (std::uint64_t v = 1; v < field->order(); ++v) {
            const LPParams params{s, Elem{v}};
            if (lp_valid(*field, params)) sets.push_back(points_of(lp_poly(field, params)));
        }
    }
    const auto cls = brute_force_partition(sets, options);
    return cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
}

CensusBounds lambda_bounds(std::uint64_t p, unsigned r, unsigned n) {
    require_census(p, r, n, "lambda_bounds");
    if (r == 1) throw std::invalid_argument("lambda_bounds: requires r > 1");
    const NumberTheory nt = number_theory(r);
    const Rational sig = nt.sigma;
    const Rational R = r;
    const unsigned s1 = two_adic_valuation(r);
    const bool pow2 = power_of_two(r);
    const QuadSurd one(p, 1);
    CensusBounds b{QuadSurd(p), QuadSurd(p), "", ""};

    if (n % 2) {
        const QuadSurd lead = hp(p, 2 * r) * Rational(1, 2 * r);
        b.lower = (hp(p, 2 * r) - Rational(p)) * Rational(1, 2 * r);
        b.lower_case = "all r";
        if (r % 2) {
            const std::uint64_t r1 = nt.factorization.front().first;
            b.upper = lead * (one + hp(p, -2 * std::int64_t(r - r / r1)) * (sig - R - 1));
            b.upper_case = "r odd";
        } else if (pow2) {
            b.upper = lead * (one + hp(p, -std::int64_t(r)) * (sig - R - 1)) + pow_sum(p, s1);
            b.upper_case = "r = 2^s";
        } else {
            b.upper = lead * (one + hp(p, -std::int64_t(r)) * (sig - R) +
                              hp(p, -std::int64_t(3 * r) / 2) * (sig - R - 1));
            b.upper_case = "2 | r, l > 1";
        }
        return b;
    }

    const Rational sig2 = divisor_sigma(2ull * r);
    const QuadSurd lead = hp(p, 4 * r) * Rational(1, 4 * r);
    const QuadSurd base = one + hp(p, -2 * std::int64_t(r)) * (sig2 - 2 * R - 1);
    if (r % 2) {
        b.upper = lead * base;
        b.upper_case = "r odd";
    } else if (pow2) {
        b.upper = lead * base + pow_sum(p, s1);
        b.upper_case = "r = 2^s";
    } else {
        b.upper = lead * (base + hp(p, -3 * std::int64_t(r)) * Rational(2) +
                          hp(p, -7 * std::int64_t(r) / 2) * (2 * (sig - R - 1)));
        b.upper_case = "2 | r, l > 1";
    }
    if (pow2) {
        b.lower = (hp(p, 4 * r) - Rational(p)) * Rational(1, 4 * r) - pow_sum(p, s1 + 1);
        b.lower_case = "r = 2^s";
    } else {
        b.lower = lead * (one - hp(p, -2 * std::int64_t(r)) - hp(p, -3 * std::int64_t(r)) * (sig2 - 2 * R - 1) -
                          hp(p, -2 * (2 * std::int64_t(r) - 1)));
        b.lower_case = "otherwise";
    }
    return b;
}

double gronwall_ratio(unsigned r) {
    if (r < 3) throw std::invalid_argument("gronwall_ratio: requires r >= 3");
    return static_cast<double>(divisor_sigma(r)) / (r * std::log(std::log(static_cast<double>(r))));
}

CensusReport census_cell(std::uint64_t p, unsigned r, unsigned n, const CensusOptions& options) {
    CensusReport rep = lambda_closed(p, r, n);
    const BigInt half_phi = euler_phi(n) / 2;
    if (options.orbit) {
        try {
            rep.orbit_lambda = BigInt(lambda_orbit_oracle(p, r, n, options.orbit_ceiling)) * half_phi;
        } catch (const CeilingExceeded&) {
        } catch (const std::overflow_error&) {
        }
    }
    if (options.brute_force) {
        try {
            rep.brute_force_lambda = BigInt(lambda_brute_force(p, r, n, options.brute));
        } catch (const CeilingExceeded&) {
        } catch (const std::overflow_error&) {
        }
    }
    if (rep.brute_force_lambda && *rep.brute_force_lambda != rep.lambda) {
        std::ostringstream os;
        os << "brute-force class count " << *rep.brute_force_lambda << " differs from the closed form " << rep.lambda;
        rep.notes.push_back(os.str());
    }
    return rep;
}

}  // namespace lpsets
