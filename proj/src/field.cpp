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

#include "lpsets/field.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <unordered_map>

#include "lpsets/numtheory.hpp"

namespace lpsets {

namespace {

using Poly = std::vector<std::uint64_t>;  // coefficients over F_p, low to high, trimmed

std::uint64_t addp(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    const std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
std::uint64_t subp(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept { return a >= b ? a - b : a + p - b; }

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = mod_inverse(f.back(), p);
    while (a.size() > df) {
        const std::uint64_t c = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t j = 0; j <= df; ++j) a[shift + j] = subp(a[shift + j], mulmod(c, f[j], p), p);
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = addp(out[i + j], mulmod(a[i], b[j], p), p);
    }
    return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Rabin's test: X^{p^m} = X mod f and gcd(X^{p^{m/l}} - X, f) = 1 for primes l | m.
bool is_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    std::vector<Poly> frob(m + 1);  // frob[k] = X^{p^k} mod f
    frob[0] = poly_mod(Poly{0, 1}, f, p);
    for (std::size_t k = 1; k <= m; ++k) frob[k] = poly_powmod(frob[k - 1], p, f, p);
    if (frob[m] != frob[0]) return false;
    for (auto [l, e] : factorize(m)) {
        Poly h = frob[m / l];
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = subp(h[1], 1, p);
        trim(h);
        if (h.empty()) return false;
        if (poly_gcd(f, h, p).size() != 1) return false;
    }
    return true;
}

}  // namespace

FieldPtr FieldTower::build(std::uint64_t p, unsigned r, unsigned n,
                           const std::optional<std::vector<std::uint64_t>>& modulus, const FieldOptions& options) {
    if (!is_prime(p)) throw std::invalid_argument("build_field: p must be prime");
    if (r == 0 || n == 0) throw std::invalid_argument("build_field: r and n must be positive");
    std::shared_ptr<FieldTower> f(new FieldTower());
    f->p_ = p;
    f->r_ = r;
    f->n_ = n;
    f->m_ = r * n;
    std::uint64_t order = 0;
    try {
        order = ipow(p, f->m_);
        f->q_ = ipow(p, r);
    } catch (const std::overflow_error&) {
        throw CeilingExceeded("build_field: p^{rn} does not fit 64 bits");
    }
    if (order > options.max_order) throw CeilingExceeded("build_field: p^{rn} exceeds the configured field ceiling");
    const std::uint64_t table_limit = std::min<std::uint64_t>(options.table_budget, std::uint64_t{1} << 32);
    if (options.tables == FieldOptions::Tables::require && order > table_limit)
        throw CeilingExceeded("build_field: p^{rn} exceeds the table budget");
    f->order_ = order;

    if (modulus) {
        const auto& c = *modulus;
        if (c.size() != f->m_ + 1 || c.back() != 1)
            throw std::invalid_argument("build_field: modulus override must be monic of degree rn");
        for (auto ci : c)
            if (ci >= p) throw std::invalid_argument("build_field: modulus coefficient out of range");
        if (!is_irreducible(c, p)) throw std::invalid_argument("build_field: modulus override is reducible");
        f->modulus_ = c;
    } else {
        for (std::uint64_t code = 0;; ++code) {
            Poly c(f->m_ + 1, 0);
            std::uint64_t rest = code;
            for (unsigned i = 0; i < f->m_; ++i) {
                c[i] = rest % p;
                rest /= p;
            }
            c[f->m_] = 1;
            if (is_irreducible(c, p)) {
                f->modulus_ = std::move(c);
                break;
            }
        }
    }

    f->frob_mult_.resize(f->m_);
    for (unsigned k = 0; k < f->m_; ++k) f->frob_mult_[k] = powmod(p, k, order - 1);

    f->find_generator();
    if (options.tables != FieldOptions::Tables::never && order <= table_limit) f->build_tables();
    return f;
}

void FieldTower::find_generator() {
    const std::uint64_t group = order_ - 1;
    for (auto [prime, e] : factorize(group)) group_primes_.push_back(prime);
    for (std::uint64_t g = 1; g < order_; ++g) {
        bool primitive = true;
        for (auto l : group_primes_) {
            if (pow_slow({g}, group / l).v == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator_ = {g};
            return;
        }
    }
    throw std::logic_error("build_field: no primitive element found");
}

void FieldTower::build_tables() {
    const std::uint64_t group = order_ - 1;
    exp_.assign(2 * group, 0);
    log_.assign(order_, kNoLog);
    Elem x{1};
    for (std::uint64_t i = 0; i < group; ++i) {
        exp_[i] = static_cast<std::uint32_t>(x.v);
        exp_[i + group] = static_cast<std::uint32_t>(x.v);
        log_[x.v] = static_cast<std::uint32_t>(i);
        x = mul_slow(x, generator_);
    }
    if (x.v != 1) throw std::logic_error("build_field: generator order mismatch");
    if (p_ != 2) {
        zech_.assign(group, kNoLog);
        for (std::uint64_t d = 0; d < group; ++d) {
            // 1 + g^d: increment the constant coefficient
            const std::uint64_t z = exp_[d];
            const std::uint64_t z1 = (z % p_ == p_ - 1) ? z - (p_ - 1) : z + 1;
            zech_[d] = z1 == 0 ? kNoLog : log_[z1];
        }
    }
}

Elem FieldTower::from_int(std::uint64_t encoding) const {
    if (encoding >= order_) throw std::invalid_argument("element encoding out of range: " + std::to_string(encoding));
    return {encoding};
}

Elem FieldTower::from_prime_field(std::int64_t c) const noexcept {
    const auto pp = static_cast<std::int64_t>(p_);
    return {static_cast<std::uint64_t>(((c % pp) + pp) % pp)};
}

std::vector<std::uint64_t> FieldTower::coefficients(Elem a) const {
    std::vector<std::uint64_t> c(m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
        c[i] = a.v % p_;
        a.v /= p_;
    }
    return c;
}

Elem FieldTower::from_coefficients(const std::vector<std::uint64_t>& c) const {
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + (c[i] % p_);
    return from_int(v);
}

Elem FieldTower::add_slow(Elem a, Elem b) const noexcept {
    std::uint64_t out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += addp(a.v % p_, b.v % p_, p_) * scale;
        a.v /= p_;
        b.v /= p_;
        scale *= p_;
    }
    return {out};
}

Elem FieldTower::neg_slow(Elem a) const noexcept {
    std::uint64_t out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        const std::uint64_t c = a.v % p_;
        out += (c == 0 ? 0 : p_ - c) * scale;
        a.v /= p_;
        scale *= p_;
    }
    return {out};
}

Elem FieldTower::mul_slow(Elem a, Elem b) const noexcept {
    if (a.v == 0 || b.v == 0) return {0};
    Poly pa = coefficients(a), pb = coefficients(b);
    trim(pa);
    trim(pb);
    Poly prod(pa.size() + pb.size() - 1, 0);
    for (std::size_t i = 0; i < pa.size(); ++i) {
        if (pa[i] == 0) continue;
        for (std::size_t j = 0; j < pb.size(); ++j) {
            if (pb[j] == 0) continue;
            prod[i + j] = addp(prod[i + j], mulmod(pa[i], pb[j], p_), p_);
        }
    }
    // modulus is monic of degree m_
    for (std::size_t k = prod.size(); k-- > m_;) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        const std::size_t shift = k - m_;
        for (unsigned j = 0; j < m_; ++j)
            if (modulus_[j] != 0) prod[shift + j] = subp(prod[shift + j], mulmod(c, modulus_[j], p_), p_);
    }
    std::uint64_t v = 0;
    for (std::size_t i = std::min<std::size_t>(prod.size(), m_); i-- > 0;) v = v * p_ + prod[i];
    return {v};
}

Elem FieldTower::pow_slow(Elem a, std::uint64_t e) const noexcept {
    Elem result{1};
    while (e) {
        if (e & 1) result = mul_slow(result, a);
        a = mul_slow(a, a);
        e >>= 1;
    }
    return result;
}

Elem FieldTower::inv(Elem a) const {
    if (a.v == 0) throw std::domain_error("inversion of zero");
    if (!log_.empty()) return {exp_[(order_ - 1) - log_[a.v]]};
    return pow_slow(a, order_ - 2);
}

Elem FieldTower::pow_u(Elem a, std::uint64_t e) const noexcept {
    if (a.v == 0) return {e == 0 ? 1u : 0u};
    const std::uint64_t group = order_ - 1;
    const std::uint64_t er = e % group;
    if (!log_.empty()) return {exp_[mulmod(log_[a.v], er, group)]};
    return pow_slow(a, er);
}

Elem FieldTower::pow(Elem a, std::int64_t e) const {
    if (a.v == 0) {
        if (e < 0) throw std::domain_error("negative power of zero");
        return {e == 0 ? 1u : 0u};
    }
    const auto group = static_cast<std::int64_t>(order_ - 1);
    std::int64_t er = e % group;
    if (er < 0) er += group;
    return pow_u(a, static_cast<std::uint64_t>(er));
}

Elem FieldTower::frobenius(Elem a, std::int64_t k) const noexcept {
    if (a.v == 0) return a;
    const auto mm = static_cast<std::int64_t>(m_);
    const auto kk = static_cast<unsigned>(((k % mm) + mm) % mm);
    if (kk == 0) return a;
    if (!log_.empty()) return {exp_[std::uint64_t{log_[a.v]} * frob_mult_[kk] % (order_ - 1)]};  // both factors < 2^32
    return pow_slow(a, ipow(p_, kk));
}

Elem FieldTower::norm_to(Elem a, unsigned d) const {
    if (d == 0 || m_ % d != 0) throw std::invalid_argument("norm_to: d must divide rn");
    return pow_u(a, (order_ - 1) / (ipow(p_, d) - 1));
}

Elem FieldTower::trace_to(Elem a, unsigned d) const {
    if (d == 0 || m_ % d != 0) throw std::invalid_argument("trace_to: d must divide rn");
    Elem t{0};
    for (unsigned i = 0; i < m_ / d; ++i) t = add(t, frobenius(a, static_cast<std::int64_t>(d * i)));
    return t;
}

bool FieldTower::in_subfield(Elem a, unsigned d) const { return frobenius(a, d) == a; }

std::uint64_t FieldTower::log(Elem a) const {
    if (a.v == 0) throw std::domain_error("log of zero");
    if (!log_.empty()) return log_[a.v];
    return log_bsgs(a);
}

std::uint64_t FieldTower::log_bsgs(Elem a) const {
    const std::uint64_t group = order_ - 1;
    const auto step = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(group)))) + 1;
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(step);
    Elem x{1};
    for (std::uint64_t j = 0; j < step; ++j) {
        baby.emplace(x.v, j);
        x = mul_slow(x, generator_);
    }
    const Elem giant = inv(pow_slow(generator_, step));
    Elem y = a;
    for (std::uint64_t i = 0; i <= step; ++i) {
        if (auto it = baby.find(y.v); it != baby.end()) return (i * step + it->second) % group;
        y = mul_slow(y, giant);
    }
    throw std::logic_error("log: discrete log not found");
}

Elem FieldTower::exp(std::uint64_t k) const noexcept {
    const std::uint64_t group = order_ - 1;
    k %= group;
    if (!exp_.empty()) return {exp_[k]};
    return pow_slow(generator_, k);
}

std::uint64_t FieldTower::multiplicative_order(Elem a) const {
    if (a.v == 0) throw std::domain_error("order of zero");
    std::uint64_t ord = order_ - 1;
    for (auto l : group_primes_) {
        while (ord % l == 0 && pow_u(a, ord / l).v == 1) ord /= l;
    }
    return ord;
}

Elem FieldTower::parse(std::string_view text) const {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty element text");
    if (text.starts_with("g^")) {
        std::string_view rest = text.substr(2);
        std::int64_t k = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
        if (ec != std::errc() || ptr != rest.data() + rest.size())
            throw std::invalid_argument("bad generator power: " + std::string(text));
        const auto group = static_cast<std::int64_t>(order_ - 1);
        std::int64_t kr = k % group;
        if (kr < 0) kr += group;
        return exp(static_cast<std::uint64_t>(kr));
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("bad element encoding: " + std::string(text));
    return from_int(v);
}

std::string FieldTower::format(Elem a) const { return std::to_string(a.v); }

namespace {
void check_same(const Element& a, const Element& b) {
    if (&a.field() != &b.field()) throw std::invalid_argument("operands from different field towers");
}
}  // namespace

Element operator+(const Element& a, const Element& b) {
    check_same(a, b);
    return {*a.field_, a.field_->add(a.value_, b.value_)};
}
Element operator-(const Element& a, const Element& b) {
    check_same(a, b);
    return {*a.field_, a.field_->sub(a.value_, b.value_)};
}
Element operator*(const Element& a, const Element& b) {
    check_same(a, b);
    return {*a.field_, a.field_->mul(a.value_, b.value_)};
}
Element operator/(const Element& a, const Element& b) {
    check_same(a, b);
    return {*a.field_, a.field_->div(a.value_, b.value_)};
}
bool operator==(const Element& a, const Element& b) {
    check_same(a, b);
    return a.value_ == b.value_;
}

}  // namespace lpsets
