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

#include "lpsets/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lpsets/numtheory.hpp"

namespace lpsets::oracle {

namespace {

/// x^{p^{k}} by repeated p-th powers, avoiding the Frobenius shortcut under test.
Elem power_chain(const FieldTower& F, Elem x, std::uint64_t times) {
    for (std::uint64_t i = 0; i < times; ++i) x = F.pow_u(x, F.p());
    return x;
}

std::vector<std::uint8_t> value_set(const LinearizedPoly& f) {
    const FieldTower& F = f.field();
    std::vector<std::uint8_t> seen(F.order(), 0);
    for (std::uint64_t v = 1; v < F.order(); ++v) seen[F.div(evaluate(f, Elem{v}), Elem{v}).v] = 1;
    return seen;
}

}  // namespace

Elem norm_power_field_sum(const LinearizedPoly& f) {
    const FieldTower& F = f.field();
    const std::uint64_t e = (F.order() - 1) / (F.q() - 1);
    Elem sum{0};
    for (std::uint64_t v = 1; v < F.order(); ++v) {
        const Elem x{v};
        sum = F.add(sum, F.pow_u(F.div(evaluate(f, x), x), e));
    }
    return F.neg(sum);
}

bool alpha_scan(const FieldTower& F, unsigned s, Elem theta, Elem delta) {
    const std::uint64_t qs = F.r() * s;
    const Elem target = power_chain(F, F.div(theta, delta), qs);
    for (std::uint64_t v = 1; v < F.order(); ++v) {
        const Elem a{v};
        const Elem a_sigma2 = power_chain(F, a, 2 * qs);
        if (F.div(a_sigma2, a) == target) return true;
    }
    return false;
}

std::vector<Elem> d_equation_scan(const FieldTower& F, unsigned s, Elem theta, Elem delta) {
    const std::uint64_t qs = F.r() * s;
    const Elem target = power_chain(F, F.div(theta, delta), qs);
    std::vector<Elem> out;
    for (std::uint64_t v = 1; v < F.order(); ++v) {
        const Elem d{v};
        if (F.mul(power_chain(F, d, qs), d) == target) out.push_back(d);
    }
    return out;
}

std::vector<Elem> d_scan(const FieldPtr& field, unsigned s, Elem theta, Elem delta) {
    const FieldTower& F = *field;
    const auto sf = value_set(lp_poly(field, {s, theta}, true));
    const auto sg = value_set(lp_poly(field, {s, delta}, true));
    std::vector<Elem> out;
    for (std::uint64_t dv = 1; dv < F.order(); ++dv) {
        bool equal = true;
        for (std::uint64_t b = 0; b < F.order() && equal; ++b) {
            const bool in_dg = sg[F.div(Elem{b}, Elem{dv}).v] != 0;
            equal = (sf[b] != 0) == in_dg;
        }
        if (equal) out.push_back(Elem{dv});
    }
    return out;
}

std::vector<Elem> c_scan(const LinearizedPoly& f, const LinearizedPoly& g) {
    const FieldTower& F = f.field();
    std::vector<std::uint8_t> ratio(F.order(), 0);  // x / f(x)
    for (std::uint64_t v = 1; v < F.order(); ++v) {
        const Elem fx = evaluate(f, Elem{v});
        if (fx.v != 0) ratio[F.div(Elem{v}, fx).v] = 1;
    }
    const auto sg = value_set(g);
    std::vector<Elem> out;
    for (std::uint64_t cv = 1; cv < F.order(); ++cv) {
        bool equal = true;
        for (std::uint64_t b = 0; b < F.order() && equal; ++b) {
            const bool in_c = ratio[F.div(Elem{b}, Elem{cv}).v] != 0;
            equal = (sg[b] != 0) == in_c;
        }
        if (equal) out.push_back(Elem{cv});
    }
    return out;
}

std::vector<SemilinearMap> naive_equivalences(const LinearSet& source, const LinearSet& target) {
    const FieldTower& F = source.field();
    const std::uint64_t N = F.order();
    std::vector<SemilinearMap> out;
    auto test = [&](Elem a, Elem b, Elem c, Elem d, unsigned k) {
        const SemilinearMap phi{a, b, c, d, k};
        for (const auto& e : source.entries())
            if (target.weight(apply(F, phi, e.point)) != e.weight) return;
        out.push_back(phi);
    };
    if (source.size() != target.size()) return out;
    for (unsigned k = 0; k < F.degree(); ++k) {
        for (std::uint64_t b = 0; b < N; ++b)
            for (std::uint64_t c = 0; c < N; ++c)
                for (std::uint64_t d = 0; d < N; ++d)
                    if (F.sub(Elem{d}, F.mul(Elem{b}, Elem{c})).v != 0) test(Elem{1}, Elem{b}, Elem{c}, Elem{d}, k);
        for (std::uint64_t c = 1; c < N; ++c)
            for (std::uint64_t d = 0; d < N; ++d) test(Elem{0}, Elem{1}, Elem{c}, Elem{d}, k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t f_count(std::uint64_t p, unsigned m) {
    const FieldPtr F = FieldTower::build(p, m, 1);
    const auto divs = divisors(m);
    std::uint64_t count = 0;
    for (std::uint64_t v = 0; v < F->order(); ++v) {
        bool proper = false;
        for (auto d : divs)
            if (d < m && F->in_subfield(Elem{v}, static_cast<unsigned>(d))) proper = true;
        count += !proper;
    }
    return count;
}

std::uint64_t k_count(std::uint64_t p, unsigned m) {
    const FieldPtr F = FieldTower::build(p, m, 1);
    const auto divs = divisors(m);
    std::uint64_t count = 0;
    for (std::uint64_t v = 1; v < F->order(); ++v) {
        const Elem x{v};
        bool proper = false;
        for (auto d : divs)
            if (d < m && F->in_subfield(x, static_cast<unsigned>(d))) proper = true;
        if (proper) continue;
        bool hit = false;
        Elem xk = x;  // x^{p^k}
        for (unsigned k = 0; k < m && !hit; ++k) {
            hit = F->mul(xk, x) == F->one();
            xk = F->pow_u(xk, p);
        }
        count += hit;
    }
    return count;
}

std::uint64_t gcd_power(std::uint64_t p, unsigned i, unsigned j) { return std::gcd(ipow(p, i) + 1, ipow(p, j) - 1); }

}  // namespace lpsets::oracle
