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

#include "lpsets/linpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace lpsets {

LinearizedPoly::LinearizedPoly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw std::invalid_argument("LinearizedPoly: null field");
    if (coeffs_.size() != field_->n()) throw std::invalid_argument("LinearizedPoly: expected exactly n coefficients");
    for (auto c : coeffs_)
        if (c.v >= field_->order()) throw std::invalid_argument("LinearizedPoly: coefficient out of range");
}

LinearizedPoly LinearizedPoly::zero(FieldPtr field) {
    const unsigned n = field->n();
    return {std::move(field), std::vector<Elem>(n)};
}

LinearizedPoly LinearizedPoly::identity(FieldPtr field) { return monomial(std::move(field), 0, Elem{1}); }

LinearizedPoly LinearizedPoly::monomial(FieldPtr field, unsigned i, Elem a) {
    std::vector<Elem> c(field->n());
    c[i % field->n()] = a;
    return {std::move(field), std::move(c)};
}

LinearizedPoly LinearizedPoly::from_sigma(FieldPtr field, unsigned s, const std::vector<Elem>& sigma_coeffs) {
    const unsigned n = field->n();
    if (std::gcd(s, n) != 1) throw std::invalid_argument("from_sigma: gcd(s, n) must be 1");
    if (sigma_coeffs.size() > n) throw std::invalid_argument("from_sigma: sigma-degree must be below n");
    std::vector<Elem> c(n);
    for (unsigned j = 0; j < sigma_coeffs.size(); ++j) c[(j * s) % n] = sigma_coeffs[j];
    return {std::move(field), std::move(c)};
}

std::optional<unsigned> LinearizedPoly::q_degree() const noexcept {
    for (unsigned i = n(); i-- > 0;)
        if (coeffs_[i].v != 0) return i;
    return std::nullopt;
}

LinearizedPoly LinearizedPoly::scaled(Elem d) const {
    std::vector<Elem> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_->mul(d, coeffs_[i]);
    return {field_, std::move(c)};
}

bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

bool lp_valid(const FieldTower& field, const LPParams& params) {
    const Elem nrm = field.norm_q(params.theta);
    return nrm.v != 0 && nrm.v != 1;
}

LinearizedPoly lp_poly(FieldPtr field, const LPParams& params, bool allow_invalid) {
    const unsigned n = field->n();
    if (params.s == 0 || params.s >= n) throw std::invalid_argument("lp_poly: s must satisfy 1 <= s < n");
    if (std::gcd(params.s, n) != 1) throw std::invalid_argument("lp_poly: gcd(s, n) must be 1");
    if (params.theta.v >= field->order()) throw std::invalid_argument("lp_poly: theta out of range");
    if (!allow_invalid && !lp_valid(*field, params))
        throw std::invalid_argument("lp_poly: N(theta) must not be 0 or 1");
    std::vector<Elem> c(n);
    c[params.s] = Elem{1};
    c[n - params.s] = field->add(c[n - params.s], params.theta);
    return {std::move(field), std::move(c)};
}

Elem evaluate(const LinearizedPoly& f, Elem x) noexcept {
    const FieldTower& F = f.field();
    const auto r = static_cast<std::int64_t>(F.r());
    Elem y{0};
    const auto c = f.coeffs();
    for (unsigned i = 0; i < c.size(); ++i) {
        if (c[i].v == 0) continue;
        y = F.add(y, F.mul(c[i], F.frobenius(x, r * i)));
    }
    return y;
}

LinearizedPoly compose(const LinearizedPoly& f, const LinearizedPoly& g) {
    if (f.field_ptr() != g.field_ptr()) throw std::invalid_argument("compose: operands from different towers");
    const FieldTower& F = f.field();
    const unsigned n = f.n();
    const auto r = static_cast<std::int64_t>(F.r());
    std::vector<Elem> c(n);
    for (unsigned i = 0; i < n; ++i) {
        if (f.coeff(i).v == 0) continue;
        for (unsigned j = 0; j < n; ++j) {
            const Elem term = F.mul(f.coeff(i), F.frobenius(g.coeff(j), r * i));
            c[(i + j) % n] = F.add(c[(i + j) % n], term);
        }
    }
    return {f.field_ptr(), std::move(c)};
}

LinearizedPoly adjoint(const LinearizedPoly& f) {
    const FieldTower& F = f.field();
    const unsigned n = f.n();
    const auto r = static_cast<std::int64_t>(F.r());
    std::vector<Elem> c(n);
    for (unsigned i = 0; i < n; ++i) {
        const unsigned j = (n - i) % n;
        c[j] = F.frobenius(f.coeff(i), r * j);
    }
    return {f.field_ptr(), std::move(c)};
}

std::uint64_t ValueMultiset::total() const noexcept { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

std::uint64_t ValueMultiset::support_size() const noexcept {
    std::uint64_t s = 0;
    for (auto c : counts) s += (c != 0);
    return s;
}

ValueMultiset value_multiset(const LinearizedPoly& f) {
    const FieldTower& F = f.field();
    ValueMultiset m;
    m.counts.assign(F.order(), 0);
    for (std::uint64_t v = 1; v < F.order(); ++v) {
        const Elem x{v};
        ++m.counts[F.div(evaluate(f, x), x).v];
    }
    return m;
}

namespace {

/// Solves A z = b in place by Gauss-Jordan elimination; false when A is singular.
bool solve_linear(const FieldTower& F, std::vector<std::vector<Elem>>& A, std::vector<Elem>& b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && A[pivot][col].v == 0) ++pivot;
        if (pivot == n) return false;
        std::swap(A[pivot], A[col]);
        std::swap(b[pivot], b[col]);
        const Elem scale = F.inv(A[col][col]);
        for (std::size_t k = col; k < n; ++k) A[col][k] = F.mul(A[col][k], scale);
        b[col] = F.mul(b[col], scale);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || A[row][col].v == 0) continue;
            const Elem factor = A[row][col];
            for (std::size_t k = col; k < n; ++k) A[row][k] = F.sub(A[row][k], F.mul(factor, A[col][k]));
            b[row] = F.sub(b[row], F.mul(factor, b[col]));
        }
    }
    return true;
}

}  // namespace

std::optional<LinearizedPoly> inverse(const LinearizedPoly& f) {
    const FieldTower& F = f.field();
    const unsigned n = f.n();
    const auto r = static_cast<std::int64_t>(F.r());
    // {1, g, ..., g^{n-1}} is an F_q-basis since g generates F_{q^n}. Want h(f(b_j)) = b_j.
    std::vector<std::vector<Elem>> moore(n, std::vector<Elem>(n));
    std::vector<Elem> rhs(n);
    for (unsigned j = 0; j < n; ++j) {
        const Elem basis = F.exp(j);
        const Elem image = evaluate(f, basis);
        for (unsigned i = 0; i < n; ++i) moore[j][i] = F.frobenius(image, r * i);
        rhs[j] = basis;
    }
    if (!solve_linear(F, moore, rhs)) return std::nullopt;
    LinearizedPoly h(f.field_ptr(), std::move(rhs));
    if (!(compose(h, f) == LinearizedPoly::identity(f.field_ptr())))
        throw std::logic_error("inverse: interpolated map is not a left inverse");
    return h;
}

Bijectivity is_bijective_lp(FieldPtr field, const LPParams& params) {
    if (params.theta.v == 0) throw std::invalid_argument("is_bijective_lp: theta must be nonzero");
    const LinearizedPoly f = lp_poly(field, params, true);
    Bijectivity out;
    out.closed_form = field->n() % 2 == 0 || field->norm_q(params.theta) != field->minus_one();
    for (std::uint64_t v = 0; v < field->order(); ++v)
        if (evaluate(f, Elem{v}).v == 0) ++out.kernel_size;
    out.by_kernel = out.kernel_size == 1;
    return out;
}

Elem norm_power_coefficient(const FieldTower& field, const LPParams& params) {
    const Elem n1 = field.norm_q(params.theta);
    Elem c = field.add(field.one(), n1);
    if (field.n() % 2 == 0) {
        const Elem n2 = field.norm_q2(params.theta);
        c = field.add(c, n2);
        c = field.add(c, field.frobenius(n2, static_cast<std::int64_t>(field.r()) * params.s));
    }
    return c;
}

}  // namespace lpsets
