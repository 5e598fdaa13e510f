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

#include "lpsets/linset.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpsets/numtheory.hpp"

namespace lpsets {

ProjPoint ProjPoint::normalize(const FieldTower& field, Elem x, Elem y) {
    if (x.v == 0) {
        if (y.v == 0) throw std::invalid_argument("ProjPoint: (0, 0) is not a point");
        return {Elem{0}, Elem{1}};
    }
    return {Elem{1}, field.div(y, x)};
}

LinearSet::LinearSet(FieldPtr field, unsigned rank, std::vector<Entry> entries)
    : field_(std::move(field)), rank_(rank), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& l, const Entry& r) { return l.point < r.point; });
    dense_.assign(field_->order() + 1, 0);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Entry& e = entries_[i];
        if (i > 0 && entries_[i - 1].point == e.point) throw std::invalid_argument("LinearSet: duplicate point");
        if (e.weight == 0 || e.weight > 255) throw std::invalid_argument("LinearSet: weight out of range");
        dense_[e.point.index()] = static_cast<std::uint8_t>(e.weight);
    }
}

std::vector<ProjPoint> LinearSet::points() const {
    std::vector<ProjPoint> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.point);
    return out;
}

unsigned LinearSet::weight(const ProjPoint& p) const noexcept {
    const std::uint64_t i = p.index();
    return i < dense_.size() ? dense_[i] : 0;
}

std::uint64_t LinearSet::size_bound() const { return (ipow(field_->q(), rank_) - 1) / (field_->q() - 1); }

std::uint64_t LinearSet::weight_mass() const {
    std::uint64_t total = 0;
    for (const auto& e : entries_) total += ipow(field_->q(), e.weight) - 1;
    return total;
}

bool LinearSet::same_points(const LinearSet& other) const noexcept {
    if (entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].point != other.entries_[i].point) return false;
    return true;
}

SemilinearMap SemilinearMap::make(const FieldTower& field, Elem a, Elem b, Elem c, Elem d, unsigned k) {
    if (field.sub(field.mul(a, d), field.mul(b, c)).v == 0)
        throw std::invalid_argument("SemilinearMap: singular matrix");
    const Elem lead = a.v != 0 ? a : b.v != 0 ? b : c;
    const Elem s = field.inv(lead);
    return {field.mul(a, s), field.mul(b, s), field.mul(c, s), field.mul(d, s), k % field.degree()};
}

SemilinearMap compose(const FieldTower& F, const SemilinearMap& phi, const SemilinearMap& psi) {
    const auto t = static_cast<std::int64_t>(phi.k);
    const Elem na = F.frobenius(psi.a, t), nb = F.frobenius(psi.b, t);
    const Elem nc = F.frobenius(psi.c, t), nd = F.frobenius(psi.d, t);
    return SemilinearMap::make(F, F.add(F.mul(phi.a, na), F.mul(phi.b, nc)), F.add(F.mul(phi.a, nb), F.mul(phi.b, nd)),
                               F.add(F.mul(phi.c, na), F.mul(phi.d, nc)), F.add(F.mul(phi.c, nb), F.mul(phi.d, nd)),
                               (phi.k + psi.k) % F.degree());
}

SemilinearMap inverse(const FieldTower& F, const SemilinearMap& phi) {
    // (M,τ)^{-1} = ((M^{-1})^{τ^{-1}}, τ^{-1}); the adjugate suffices projectively.
    const auto back = -static_cast<std::int64_t>(phi.k);
    return SemilinearMap::make(F, F.frobenius(phi.d, back), F.frobenius(F.neg(phi.b), back),
                               F.frobenius(F.neg(phi.c), back), F.frobenius(phi.a, back),
                               (F.degree() - phi.k) % F.degree());
}

ProjPoint apply(const FieldTower& F, const SemilinearMap& phi, const ProjPoint& p) noexcept {
    const auto t = static_cast<std::int64_t>(phi.k);
    const Elem x = F.frobenius(p.x, t), y = F.frobenius(p.y, t);
    const Elem u = F.add(F.mul(phi.a, x), F.mul(phi.b, y));
    const Elem v = F.add(F.mul(phi.c, x), F.mul(phi.d, y));
    if (u.v == 0) return {Elem{0}, Elem{1}};
    return {Elem{1}, F.div(v, u)};
}

LinearSet points_of(const LinearizedPoly& f) {
    const FieldTower& F = f.field();
    const ValueMultiset m = value_multiset(f);
    std::vector<LinearSet::Entry> entries;
    for (std::uint64_t b = 0; b < m.counts.size(); ++b) {
        const std::uint64_t count = m.counts[b];
        if (count == 0) continue;
        unsigned w = 0;
        std::uint64_t qw = 1;
        while (qw - 1 < count) {
            qw *= F.q();
            ++w;
        }
        if (qw - 1 != count) throw std::logic_error("points_of: point multiplicity is not of the form q^w - 1");
        entries.push_back({ProjPoint{Elem{1}, Elem{b}}, w});
    }
    return {f.field_ptr(), F.n(), std::move(entries)};
}

Scatteredness scatteredness(const LinearSet& set) {
    Scatteredness s;
    s.all_weight_one = std::all_of(set.entries().begin(), set.entries().end(),
                                   [](const LinearSet::Entry& e) { return e.weight == 1; });
    s.maximum_size = set.size() == set.size_bound();
    return s;
}

bool is_scattered(const LinearSet& set) {
    const Scatteredness s = scatteredness(set);
    if (s.all_weight_one != s.maximum_size)
        throw std::logic_error("is_scattered: weight and size characterizations disagree");
    return s.all_weight_one;
}

bool is_scattered(const LinearizedPoly& f) { return is_scattered(points_of(f)); }

LinearSet apply_map(const LinearSet& set, const SemilinearMap& phi) {
    std::vector<LinearSet::Entry> image;
    image.reserve(set.size());
    for (const auto& e : set.entries()) image.push_back({apply(set.field(), phi, e.point), e.weight});
    return {set.field_ptr(), set.rank(), std::move(image)};
}

CoefficientIdentities check_coefficient_identities(const LinearizedPoly& f, const LinearizedPoly& g) {
    if (f.field_ptr() != g.field_ptr()) throw std::invalid_argument("check_coefficient_identities: different towers");
    const FieldTower& F = f.field();
    const unsigned n = f.n();
    const auto r = static_cast<std::int64_t>(F.r());
    auto fr = [&](Elem x, unsigned i) { return F.frobenius(x, r * i); };

    CoefficientIdentities out;
    out.constant_term = f.coeff(0) == g.coeff(0);

    out.paired = true;
    for (unsigned k = 1; k < n; ++k) {
        const Elem lhs = F.mul(f.coeff(k), fr(f.coeff(n - k), k));
        const Elem rhs = F.mul(g.coeff(k), fr(g.coeff(n - k), k));
        out.paired = out.paired && lhs == rhs;
    }

    auto triple = [&](const LinearizedPoly& h, unsigned k) {
        const Elem t1 = F.mul(F.mul(h.coeff(1), fr(h.coeff(k - 1), 1)), fr(h.coeff(n - k), k));
        const Elem t2 = F.mul(F.mul(h.coeff(k), fr(h.coeff(n - 1), 1)), fr(h.coeff(n - k + 1), k));
        return F.add(t1, t2);
    };
    out.triple = true;
    for (unsigned k = 2; k < n; ++k) out.triple = out.triple && triple(f, k) == triple(g, k);
    return out;
}

}  // namespace lpsets
