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

#include "lpsets/equiv.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

#include "lpsets/numtheory.hpp"
#include "lpsets/oracles.hpp"
#include "lpsets/parallel.hpp"

namespace lpsets {

namespace {

std::int64_t sigma_shift(const FieldTower& F, unsigned s) { return static_cast<std::int64_t>(F.r()) * s; }

void require_lp(const FieldTower& F, const LPParams& params, const char* who) {
    const unsigned n = F.n();
    if (n < 3) throw std::invalid_argument(std::string(who) + ": n must be at least 3");
    if (params.s == 0 || 2 * params.s >= n || std::gcd(params.s, n) != 1)
        throw std::invalid_argument(std::string(who) + ": s must satisfy gcd(s, n) = 1 and 1 <= s < n/2");
    if (!lp_valid(F, params)) throw std::invalid_argument(std::string(who) + ": N(theta) must not be 0 or 1");
}

/// True when {d · b^τ : b ∈ M_g} reproduces M_f with multiplicities.
bool scaled_multiset_matches(const FieldTower& F, const ValueMultiset& mf, const ValueMultiset& mg, Elem d,
                             unsigned tau) {
    if (mf.support_size() != mg.support_size()) return false;
    for (std::uint64_t b = 0; b < mg.counts.size(); ++b) {
        if (mg.counts[b] == 0) continue;
        const Elem image = F.mul(d, F.frobenius(Elem{b}, tau));
        if (mf.counts[image.v] != mg.counts[b]) return false;
    }
    return true;
}

ValueMultiset cross_multiset(const LinearizedPoly& f, Elem c) {
    const FieldTower& F = f.field();
    ValueMultiset m;
    m.counts.assign(F.order(), 0);
    for (std::uint64_t v = 1; v < F.order(); ++v) {
        const Elem fx = evaluate(f, Elem{v});
        if (fx.v == 0) throw std::invalid_argument("cross relation: f must be bijective");
        ++m.counts[F.mul(c, F.div(Elem{v}, fx)).v];
    }
    return m;
}

/// The unique-up-to-scalar matrix sending e1, e2, e1+e2 to P, Q, R; false when two points coincide.
bool frame(const FieldTower& F, const ProjPoint& P, const ProjPoint& Q, const ProjPoint& R, Elem out[4]) {
    const Elem det = F.sub(F.mul(P.x, Q.y), F.mul(Q.x, P.y));
    if (det.v == 0) return false;
    const Elem inv = F.inv(det);
    const Elem lambda = F.mul(F.sub(F.mul(R.x, Q.y), F.mul(Q.x, R.y)), inv);
    const Elem mu = F.mul(F.sub(F.mul(P.x, R.y), F.mul(R.x, P.y)), inv);
    if (lambda.v == 0 || mu.v == 0) return false;
    out[0] = F.mul(lambda, P.x);
    out[1] = F.mul(mu, Q.x);
    out[2] = F.mul(lambda, P.y);
    out[3] = F.mul(mu, Q.y);
    return true;
}

/**
 * Enumerates every φ = (M, τ) with φ(source) = target. Calls `emit(task, φ)` and stops a task
 * early when `emit` returns false. Tasks are (τ, first target point) pairs in ascending order.
 */
template <class Emit>
void scan_equivalences(const LinearSet& source, const LinearSet& target, const BruteForceOptions& options,
                       Emit&& emit, const std::atomic<std::size_t>* stop_after = nullptr) {
    const FieldTower& F = source.field();
    if (F.order() > options.ceiling)
        throw CeilingExceeded("brute force: p^{rn} exceeds the configured ceiling");
    const auto& src = source.entries();
    const auto& dst = target.entries();
    const std::size_t m = dst.size();
    const std::size_t tasks = static_cast<std::size_t>(F.degree()) * m;

    parallel_for(tasks, options.workers, [&](std::size_t task) {
        if (stop_after && task > stop_after->load()) return;
        const unsigned tau = static_cast<unsigned>(task / m);
        const std::size_t i = task % m;
        if (dst[i].weight != src[0].weight) return;

        std::vector<ProjPoint> moved(src.size());
        for (std::size_t t = 0; t < src.size(); ++t)
            moved[t] = {F.frobenius(src[t].point.x, tau), F.frobenius(src[t].point.y, tau)};
        Elem A[4];
        if (!frame(F, moved[0], moved[1], moved[2], A)) throw std::logic_error("brute force: degenerate source frame");
        const Elem Ainv[4] = {A[3], F.neg(A[1]), F.neg(A[2]), A[0]};

        for (std::size_t j = 0; j < m; ++j) {
            if (j == i || dst[j].weight != src[1].weight) continue;
            for (std::size_t k = 0; k < m; ++k) {
                if (k == i || k == j || dst[k].weight != src[2].weight) continue;
                Elem B[4];
                if (!frame(F, dst[i].point, dst[j].point, dst[k].point, B)) continue;
                const Elem a = F.add(F.mul(B[0], Ainv[0]), F.mul(B[1], Ainv[2]));
                const Elem b = F.add(F.mul(B[0], Ainv[1]), F.mul(B[1], Ainv[3]));
                const Elem c = F.add(F.mul(B[2], Ainv[0]), F.mul(B[3], Ainv[2]));
                const Elem d = F.add(F.mul(B[2], Ainv[1]), F.mul(B[3], Ainv[3]));
                bool ok = true;
                for (std::size_t t = 3; t < src.size() && ok; ++t) {
                    const Elem u = F.add(F.mul(a, moved[t].x), F.mul(b, moved[t].y));
                    const Elem v = F.add(F.mul(c, moved[t].x), F.mul(d, moved[t].y));
                    const ProjPoint image = u.v == 0 ? ProjPoint{Elem{0}, Elem{1}} : ProjPoint{Elem{1}, F.div(v, u)};
                    ok = target.weight(image) == src[t].weight;
                }
                if (!ok) continue;
                if (!emit(task, SemilinearMap::make(F, a, b, c, d, tau))) return;
            }
        }
    });
}

bool comparable(const LinearSet& source, const LinearSet& target) {
    if (source.field_ptr() != target.field_ptr()) throw std::invalid_argument("brute force: different towers");
    if (source.size() != target.size()) return false;
    std::vector<unsigned> ws, wt;
    for (const auto& e : source.entries()) ws.push_back(e.weight);
    for (const auto& e : target.entries()) wt.push_back(e.weight);
    std::sort(ws.begin(), ws.end());
    std::sort(wt.begin(), wt.end());
    return ws == wt;
}

}  // namespace

LPParams normalize_s(const FieldTower& F, const LPParams& params) {
    const unsigned n = F.n();
    if (n < 3) throw std::invalid_argument("normalize_s: n must be at least 3");
    if (params.s == 0 || params.s >= n || std::gcd(params.s, n) != 1)
        throw std::invalid_argument("normalize_s: s must satisfy gcd(s, n) = 1 and 1 <= s < n");
    if (params.theta.v == 0) throw std::invalid_argument("normalize_s: theta must be nonzero");
    if (2 * params.s < n) return params;
    return {n - params.s, F.inv(params.theta)};
}

bool alpha_condition(const FieldTower& F, unsigned, Elem theta, Elem delta) {
    if (theta.v == 0 || delta.v == 0) throw std::invalid_argument("alpha_condition: theta and delta must be nonzero");
    if (F.n() % 2 == 1) return F.norm_q(theta) == F.norm_q(delta);
    return F.norm_q2(theta) == F.norm_q2(delta);
}

std::vector<Elem> d_solutions(const FieldTower& F, unsigned s, Elem theta, Elem delta) {
    if (theta.v == 0 || delta.v == 0) throw std::invalid_argument("d_solutions: theta and delta must be nonzero");
    const std::uint64_t M = F.group_order();
    const Elem rhs = F.frobenius(F.div(theta, delta), sigma_shift(F, s));
    const std::uint64_t e = (powmod(F.q(), s, M) + 1) % M;
    const std::uint64_t L = F.log(rhs);
    const std::uint64_t g = std::gcd(e, M);
    std::vector<Elem> out;
    if (L % g != 0) return out;
    const std::uint64_t step = M / g;
    const std::uint64_t j0 = mulmod(L / g, mod_inverse((e / g) % step, step), step);
    for (std::uint64_t t = 0; t < g; ++t) out.push_back(F.exp(j0 + t * step));
    std::sort(out.begin(), out.end());
    return out;
}

bool exists_d(const FieldTower& F, unsigned s, Elem theta, Elem delta, EvenBranch branch) {
    if (theta.v == 0 || delta.v == 0) throw std::invalid_argument("exists_d: theta and delta must be nonzero");
    if (F.n() % 2 == 1) {
        const Elem nt = F.norm_q(theta), nd = F.norm_q(delta);
        return nt == nd || nt == F.inv(nd);
    }
    const Elem nt = F.norm_q2(theta), nd = F.norm_q2(delta);
    Elem inverse_branch = F.inv(nd);
    if (branch == EvenBranch::twisted) inverse_branch = F.frobenius(inverse_branch, sigma_shift(F, s));
    return nt == nd || nt == inverse_branch;
}

std::vector<Elem> realized_d(const FieldPtr& field, unsigned s, Elem theta, Elem delta,
                             const std::vector<Elem>& candidates) {
    const FieldTower& F = *field;
    const ValueMultiset mf = value_multiset(lp_poly(field, {s, theta}, true));
    const ValueMultiset mg = value_multiset(lp_poly(field, {s, delta}, true));
    std::vector<Elem> out;
    for (Elem d : candidates)
        if (scaled_multiset_matches(F, mf, mg, d, 0)) out.push_back(d);
    return out;
}

bool cross_relation_holds(const LinearizedPoly& f, const LinearizedPoly& g, Elem c) {
    return cross_multiset(f, c) == value_multiset(g);
}

CrossSolutions n4_cross(const FieldPtr& field, Elem theta, Elem delta) {
    const FieldTower& F = *field;
    if (F.n() != 4) throw std::invalid_argument("n4_cross: requires n = 4");
    if (!lp_valid(F, {1, theta}) || !lp_valid(F, {1, delta}))
        throw std::invalid_argument("n4_cross: norms of theta and delta must avoid 0 and 1");
    const std::int64_t q = F.r();
    auto qpow = [&](Elem x, int i) { return F.frobenius(x, q * i); };

    CrossSolutions out;
    const Elem lhs = F.mul(qpow(theta, 2), theta);
    const Elem first = F.mul(qpow(delta, 2), delta);
    const Elem second = F.inv(F.mul(qpow(delta, 3), qpow(delta, 1)));
    out.exists = lhs == first || lhs == second;

    // f^{-1} = h / (θ^q - θ^{-q³}) with h = X^q - θ^{-q³} X^{q³}; c = d (θ^q - θ^{-q³}) where L_g = L_{d h}.
    const Elem theta_inv_q3 = F.inv(qpow(theta, 3));
    const Elem scale = F.sub(qpow(theta, 1), theta_inv_q3);
    const Elem h_delta = F.neg(theta_inv_q3);
    const LinearizedPoly f = lp_poly(field, {1, theta});
    const LinearizedPoly g = lp_poly(field, {1, delta});
    for (Elem d : d_solutions(F, 1, delta, h_delta)) {
        const Elem c = F.mul(d, scale);
        (cross_relation_holds(f, g, c) ? out.c : out.rejected).push_back(c);
    }
    std::sort(out.c.begin(), out.c.end());
    std::sort(out.rejected.begin(), out.rejected.end());
    return out;
}

bool no_cross_above_4(const LinearizedPoly& f, const LinearizedPoly& g) {
    const FieldTower& F = f.field();
    if (F.n() <= 4) throw std::invalid_argument("no_cross_above_4: requires n > 4");
    const ValueMultiset base = cross_multiset(f, F.one());
    const ValueMultiset mg = value_multiset(g);
    for (std::uint64_t cv = 1; cv < F.order(); ++cv)
        if (scaled_multiset_matches(F, mg, base, Elem{cv}, 0)) return false;
    return true;
}

std::string to_string(EquivVerdict::Case c) {
    switch (c) {
        case EquivVerdict::Case::odd_n:
            return "odd-n (a)";
        case EquivVerdict::Case::even_n:
            return "even-n (b)";
        case EquivVerdict::Case::not_equivalent:
            return "not-equivalent";
    }
    return "not-equivalent";
}

EquivVerdict lp_equivalent(const FieldPtr& field, const LPParams& fp, const LPParams& gp) {
    const FieldTower& F = *field;
    require_lp(F, fp, "lp_equivalent");
    require_lp(F, gp, "lp_equivalent");
    EquivVerdict verdict;
    if (fp.s != gp.s) return verdict;

    const bool odd = F.n() % 2 == 1;
    auto norm = [&](Elem x) { return odd ? F.norm_q(x) : F.norm_q2(x); };
    const Elem nt = norm(fp.theta);
    for (unsigned tau = 0; tau < F.degree() && !verdict.equivalent; ++tau) {
        const Elem nd = norm(F.frobenius(gp.theta, tau));
        if (nt == nd || nt == F.inv(nd)) {
            verdict.equivalent = true;
            verdict.tau_exponent = tau;
        }
    }
    if (!verdict.equivalent) return verdict;
    verdict.which = odd ? EquivVerdict::Case::odd_n : EquivVerdict::Case::even_n;

    const LinearizedPoly f = lp_poly(field, fp);
    const LinearizedPoly g = lp_poly(field, gp);
    const LinearSet Lf = points_of(f);
    const LinearSet Lg = points_of(g);
    const ValueMultiset mf = value_multiset(f);
    const ValueMultiset mg = value_multiset(g);

    auto accept = [&](const SemilinearMap& g_to_f, Elem scalar, unsigned tau, bool anti) {
        const SemilinearMap w = inverse(F, g_to_f);
        if (!(apply_map(Lf, w) == Lg)) return false;
        verdict.witness = w;
        verdict.witness_scalar = scalar;
        verdict.tau_exponent = tau;
        verdict.antidiagonal = anti;
        verdict.checked = true;
        return true;
    };

    // (diag(1,d), τ) sends L_g to L_{d g^τ}; it lands on L_f exactly when the multisets agree.
    for (unsigned tau = 0; tau < F.degree(); ++tau) {
        const Elem dt = F.frobenius(gp.theta, tau);
        for (Elem d : d_solutions(F, fp.s, fp.theta, dt)) {
            if (!scaled_multiset_matches(F, mf, mg, d, tau)) continue;
            if (accept(SemilinearMap::make(F, F.one(), F.zero(), F.zero(), d, tau), d, tau, false)) return verdict;
        }
    }
    if (F.n() == 4) {
        for (unsigned tau = 0; tau < F.degree(); ++tau) {
            const CrossSolutions cross = n4_cross(field, F.frobenius(gp.theta, tau), fp.theta);
            for (Elem c : cross.c)
                if (accept(SemilinearMap::make(F, F.zero(), F.one(), c, F.zero(), tau), c, tau, true)) return verdict;
        }
    }
    return verdict;
}

std::optional<SemilinearMap> find_equivalence(const LinearSet& source, const LinearSet& target,
                                              const BruteForceOptions& options) {
    if (!comparable(source, target)) return std::nullopt;
    if (source.size() < 3) {
        auto all = oracle::naive_equivalences(source, target);
        if (all.empty()) return std::nullopt;
        return all.front();
    }
    const std::size_t none = static_cast<std::size_t>(-1);
    std::atomic<std::size_t> best{none};
    std::vector<std::optional<SemilinearMap>> found(static_cast<std::size_t>(source.field().degree()) * target.size());
    scan_equivalences(
        source, target, options,
        [&](std::size_t task, const SemilinearMap& phi) {
            found[task] = phi;
            std::size_t cur = best.load();
            while (task < cur && !best.compare_exchange_weak(cur, task)) {
            }
            return false;
        },
        &best);
    for (const auto& r : found)
        if (r) return r;
    return std::nullopt;
}

std::vector<SemilinearMap> all_equivalences(const LinearSet& source, const LinearSet& target,
                                            const BruteForceOptions& options) {
    if (!comparable(source, target)) return {};
    if (source.size() < 3) return oracle::naive_equivalences(source, target);
    std::vector<std::vector<SemilinearMap>> per_task(static_cast<std::size_t>(source.field().degree()) *
                                                     target.size());
    scan_equivalences(source, target, options, [&](std::size_t task, const SemilinearMap& phi) {
        per_task[task].push_back(phi);
        return true;
    });
    std::vector<SemilinearMap> out;
    for (auto& v : per_task) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<SemilinearMap> brute_force_equivalent(const LinearizedPoly& f, const LinearizedPoly& g,
                                                    const BruteForceOptions& options) {
    if (f.field().order() > options.ceiling)
        throw CeilingExceeded("brute force: p^{rn} exceeds the configured ceiling");
    const auto all = all_equivalences(points_of(f), points_of(g), options);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::vector<SemilinearMap> brute_force_stabilizer(const LinearizedPoly& f, const BruteForceOptions& options) {
    if (f.field().order() > options.ceiling)
        throw CeilingExceeded("brute force: p^{rn} exceeds the configured ceiling");
    const LinearSet L = points_of(f);
    return all_equivalences(L, L, options);
}

std::vector<std::size_t> brute_force_partition(const std::vector<LinearSet>& sets, const BruteForceOptions& options) {
    std::vector<std::size_t> klass(sets.size());
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::size_t found = reps.size();
        for (std::size_t r = 0; r < reps.size() && found == reps.size(); ++r)
            if (find_equivalence(sets[i], sets[reps[r]], options)) found = r;
        if (found == reps.size()) reps.push_back(i);
        klass[i] = found;
    }
    return klass;
}

std::uint64_t n_tau(const FieldTower& F, Elem theta) {
    if (theta.v == 0) throw std::invalid_argument("n_tau: theta must be nonzero");
    const bool odd = F.n() % 2 == 1;
    auto norm = [&](Elem x) { return odd ? F.norm_q(x) : F.norm_q2(x); };
    const Elem nt = norm(theta);
    std::uint64_t count = 0;
    for (unsigned tau = 0; tau < F.degree(); ++tau) {
        const Elem nx = norm(F.frobenius(theta, tau));
        count += nt == nx || nt == F.inv(nx);
    }
    return count;
}

AutGroup automorphisms(const FieldPtr& field, const LPParams& params) {
    const FieldTower& F = *field;
    require_lp(F, params, "automorphisms");
    const Elem theta = params.theta;
    const unsigned n = F.n();
    const std::int64_t q = F.r();
    AutGroup out;

    for (unsigned tau = 0; tau < F.degree(); ++tau) {
        const Elem tt = F.frobenius(theta, tau);
        if (!exists_d(F, params.s, theta, tt, EvenBranch::twisted)) continue;
        for (Elem d : d_solutions(F, params.s, theta, tt))
            out.d_part.push_back(SemilinearMap::make(F, F.one(), F.zero(), F.zero(), d, tau));
    }
    if (n == 4) {
        // (antidiag(1; c), τ) with (c / (θ^{τq} - θ^{-τq³}))^{q+1} = (-θ^{τq³+1})^q.
        for (unsigned tau = 0; tau < F.degree(); ++tau) {
            const Elem tt = F.frobenius(theta, tau);
            const Elem lhs = F.mul(F.frobenius(tt, 2 * q), tt);
            const bool cond = lhs == F.mul(F.frobenius(theta, 2 * q), theta) ||
                              lhs == F.inv(F.mul(F.frobenius(theta, 3 * q), F.frobenius(theta, q)));
            if (!cond) continue;
            const Elem tt_inv_q3 = F.inv(F.frobenius(tt, 3 * q));
            const Elem scale = F.sub(F.frobenius(tt, q), tt_inv_q3);
            for (Elem d : d_solutions(F, 1, theta, F.neg(tt_inv_q3)))
                out.c_part.push_back(SemilinearMap::make(F, F.zero(), F.one(), F.mul(d, scale), F.zero(), tau));
        }
    }
    std::sort(out.d_part.begin(), out.d_part.end());
    std::sort(out.c_part.begin(), out.c_part.end());
    out.elements = out.d_part;
    out.elements.insert(out.elements.end(), out.c_part.begin(), out.c_part.end());
    std::sort(out.elements.begin(), out.elements.end());

    const LinearSet L = points_of(lp_poly(field, params));
    for (const auto& phi : out.elements)
        if (!(apply_map(L, phi) == L)) out.not_stabilizing.push_back(phi);

    out.n_tau = n_tau(F, theta);
    std::uint64_t factor = 0;
    if (n % 2 == 1)
        factor = F.p() == 2 ? 1 : 2;
    else
        factor = n == 4 ? 2 * (F.q() + 1) : F.q() + 1;
    out.predicted_size = factor * out.n_tau;
    out.size_matches_formula = out.elements.size() == out.predicted_size;
    return out;
}

bool is_group(const FieldTower& F, const std::vector<SemilinearMap>& elements) {
    auto has = [&](const SemilinearMap& x) { return std::binary_search(elements.begin(), elements.end(), x); };
    if (!has(SemilinearMap::identity())) return false;
    for (const auto& a : elements) {
        if (!has(inverse(F, a))) return false;
        for (const auto& b : elements)
            if (!has(compose(F, a, b))) return false;
    }
    return true;
}

}  // namespace lpsets
