/*
   Copyright 2026 The logfree authors

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

#pragma once

#include <functional>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "logfree/matrix.hpp"
#include "logfree/parser.hpp"
#include "logfree/poly.hpp"

namespace logfree {

/**
 * Buchberger Groebner bases for ideals and for submodules of a free module
 * R^m, plus syzygy computation via lifted S-pair reductions and the
 * elimination-based algebraic independence test.
 *
 * Module elements use the position-over-term order: component 0 dominates,
 * ties are broken by the ring's active monomial order. Pair selection is
 * the normal strategy (lowest lcm total degree first) with pair creation
 * index as the tie-break, so bases come out the same on every run.
 */

/// Element of the free module R^m. Ideals are the m = 1 case.
struct VecPoly {
    std::vector<Poly> comps;

    static VecPoly zero(const RingPtr& ring, std::size_t m) {
        return {std::vector<Poly>(m, Poly::zero(ring))};
    }

    static VecPoly unit(const RingPtr& ring, std::size_t m, std::size_t pos) {
        VecPoly v = zero(ring, m);
        v.comps[pos] = Poly::constant(ring, 1);
        return v;
    }

    static VecPoly of(Poly p) { return {{std::move(p)}}; }

    std::size_t rank() const { return comps.size(); }
    const RingPtr& ring() const { return comps.front().ring(); }

    bool is_zero() const {
        for (const Poly& c : comps)
            if (!c.is_zero()) return false;
        return true;
    }

    VecPoly operator-() const {
        VecPoly v = *this;
        for (Poly& c : v.comps) c = -c;
        return v;
    }

    VecPoly operator+(const VecPoly& o) const {
        VecPoly v = *this;
        for (std::size_t i = 0; i < comps.size(); ++i) v.comps[i] += o.comps[i];
        return v;
    }

    VecPoly operator-(const VecPoly& o) const {
        VecPoly v = *this;
        for (std::size_t i = 0; i < comps.size(); ++i) v.comps[i] -= o.comps[i];
        return v;
    }

    VecPoly times_term(const Monomial& m, const Scalar& c) const {
        VecPoly v = *this;
        for (Poly& p : v.comps) p = p.times_term(m, c);
        return v;
    }

    bool operator==(const VecPoly& o) const { return comps == o.comps; }
};

struct ModLead {
    std::size_t pos;
    Monomial mono;
    Scalar coeff;
};

inline ModLead mod_lead(const VecPoly& v) {
    for (std::size_t p = 0; p < v.comps.size(); ++p) {
        if (!v.comps[p].is_zero())
            return {p, v.comps[p].leading_monomial(), v.comps[p].leading_coefficient()};
    }
    fail(ErrorCode::InternalError, "leading term of the zero module element");
}

/// Position-over-term comparison of leading terms; earlier positions win.
inline int mod_lead_compare(const ModLead& a, const ModLead& b, const MonomialOrder& o) {
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
    return mono_compare(a.mono, b.mono, o);
}

namespace detail {

// Full normal form of v against a monic basis. Irreducible leading terms
// migrate into the remainder; every reduction step is reported through
// on_reduce so callers can mirror it on lifted data.
inline VecPoly normal_form_impl(
    VecPoly v, const std::vector<VecPoly>& basis,
    const std::function<void(std::size_t, const Monomial&, const Scalar&)>& on_reduce = {}) {
    if (v.is_zero()) return v;
    const RingPtr ring = v.ring();
    VecPoly rem = VecPoly::zero(ring, v.rank());
    while (!v.is_zero()) {
        const ModLead lead = mod_lead(v);
        bool reduced = false;
        for (std::size_t l = 0; l < basis.size(); ++l) {
            const VecPoly& g = basis[l];
            if (g.is_zero()) continue;
            const ModLead gl = mod_lead(g);
            if (gl.pos != lead.pos || !gl.mono.divides(lead.mono)) continue;
            const Monomial q = lead.mono / gl.mono;
            v = v - g.times_term(q, lead.coeff);
            if (on_reduce) on_reduce(l, q, lead.coeff);
            reduced = true;
            break;
        }
        if (!reduced) {
            Poly t = Poly::term(ring, lead.mono, lead.coeff);
            rem.comps[lead.pos] += t;
            v.comps[lead.pos] -= t;
        }
    }
    return rem;
}

struct GBOptions {
    bool reduce = true;
    std::size_t pair_limit = 200000;
};

// Plain Buchberger loop on monic generators. The product criterion is only
// sound for ideals, never applied to genuine module input.
inline std::vector<VecPoly> buchberger_core(const std::vector<VecPoly>& inputs,
                                            const RingPtr& ring, std::size_t module_rank,
                                            const GBOptions& opts) {
    std::vector<VecPoly> basis;
    // (lcm degree, creation index, i, j)
    std::set<std::tuple<Degree, std::size_t, std::size_t, std::size_t>> pairs;
    std::size_t counter = 0;

    auto add_pairs_for = [&](std::size_t j) {
        const ModLead lj = mod_lead(basis[j]);
        for (std::size_t i = 0; i < j; ++i) {
            const ModLead li = mod_lead(basis[i]);
            if (li.pos != lj.pos) continue;
            if (module_rank == 1 && Monomial::lcm(li.mono, lj.mono) == li.mono * lj.mono)
                continue; // coprime leading monomials reduce to zero
            pairs.emplace(Monomial::lcm(li.mono, lj.mono).degree(), counter++, i, j);
        }
    };

    for (const VecPoly& v : inputs) {
        if (v.is_zero()) continue;
        basis.push_back(v.times_term(Monomial(ring->nvars()), mod_lead(v).coeff.inverse()));
        add_pairs_for(basis.size() - 1);
    }

    std::size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > opts.pair_limit)
            fail(ErrorCode::PairLimitExceeded, "Buchberger pair limit exceeded");
        auto [deg, idx, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        const ModLead li = mod_lead(basis[i]);
        const ModLead lj = mod_lead(basis[j]);
        const Monomial lcm = Monomial::lcm(li.mono, lj.mono);
        VecPoly s = basis[i].times_term(lcm / li.mono, Scalar::one(ring->field)) -
                    basis[j].times_term(lcm / lj.mono, Scalar::one(ring->field));
        VecPoly r = normal_form_impl(std::move(s), basis);
        if (r.is_zero()) continue;
        basis.push_back(r.times_term(Monomial(ring->nvars()), mod_lead(r).coeff.inverse()));
        add_pairs_for(basis.size() - 1);
    }
    return basis;
}

// Minimalize + tail-reduce + sort: the unique reduced basis for the order.
inline std::vector<VecPoly> interreduce(std::vector<VecPoly> basis, const RingPtr& ring) {
    std::vector<bool> removed(basis.size(), false);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const ModLead li = mod_lead(basis[i]);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || removed[j]) continue;
            const ModLead lj = mod_lead(basis[j]);
            if (lj.pos != li.pos || !lj.mono.divides(li.mono)) continue;
            if (lj.mono == li.mono && j > i) continue; // equal leads: keep the first
            removed[i] = true;
            break;
        }
    }
    std::vector<VecPoly> kept;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!removed[i]) kept.push_back(std::move(basis[i]));
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<VecPoly> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        kept[i] = normal_form_impl(kept[i], others);
    }
    std::sort(kept.begin(), kept.end(), [&](const VecPoly& a, const VecPoly& b) {
        return mod_lead_compare(mod_lead(a), mod_lead(b), ring->order) < 0;
    });
    return kept;
}

} // namespace detail

/// A Groebner basis of an ideal (module_rank 1) or a submodule of R^m.
struct GroebnerBasis {
    RingPtr ring;
    std::size_t module_rank = 1;
    std::vector<VecPoly> gens;
    bool reduced = true;

    std::vector<Poly> polys() const {
        std::vector<Poly> ps;
        for (const VecPoly& g : gens) ps.push_back(g.comps.at(0));
        return ps;
    }
};

inline GroebnerBasis buchberger_module(const std::vector<VecPoly>& gens, const RingPtr& ring,
                                       std::size_t module_rank,
                                       const detail::GBOptions& opts = {}) {
    for (const VecPoly& g : gens) {
        if (g.rank() != module_rank) fail(ErrorCode::DimensionMismatch, "module rank mismatch");
        for (const Poly& c : g.comps) require_same_ring(ring, c.ring());
    }
    auto basis = detail::buchberger_core(gens, ring, module_rank, opts);
    if (opts.reduce) basis = detail::interreduce(std::move(basis), ring);
    return {ring, module_rank, std::move(basis), opts.reduce};
}

inline GroebnerBasis buchberger(const std::vector<Poly>& gens,
                                const detail::GBOptions& opts = {}) {
    if (gens.empty()) fail(ErrorCode::InvalidProblem, "empty generator list");
    std::vector<VecPoly> vs;
    for (const Poly& g : gens) vs.push_back(VecPoly::of(g));
    return buchberger_module(vs, gens[0].ring(), 1, opts);
}

inline VecPoly normal_form(const VecPoly& v, const GroebnerBasis& gb) {
    if (v.rank() != gb.module_rank) fail(ErrorCode::DimensionMismatch, "module rank mismatch");
    for (const Poly& c : v.comps) require_same_ring(c.ring(), gb.ring);
    return detail::normal_form_impl(v, gb.gens);
}

inline Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
    return normal_form(VecPoly::of(f), gb).comps.at(0);
}

/// Checks the Buchberger criterion verbatim: every S-pair of basis
/// elements reduces to zero against the basis.
inline bool spair_criterion_holds(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
            const ModLead li = mod_lead(gb.gens[i]);
            const ModLead lj = mod_lead(gb.gens[j]);
            if (li.pos != lj.pos) continue;
            const Monomial lcm = Monomial::lcm(li.mono, lj.mono);
            VecPoly s = gb.gens[i].times_term(lcm / li.mono, li.coeff.inverse()) -
                        gb.gens[j].times_term(lcm / lj.mono, lj.coeff.inverse());
            if (!detail::normal_form_impl(std::move(s), gb.gens).is_zero())
                return false;
        }
    }
    return true;
}

/// Generating set of the column annihilator {v : a.v = 0}, from lifted
/// S-pair reductions: every pair that drops to zero hands its accumulated
/// cofactors straight to the syzygy module. The collected set is then
/// canonicalized into the reduced module basis, sorted by degree.
struct SyzygyBasis {
    std::vector<std::vector<Poly>> columns; // each of length a.cols()
    std::vector<Degree> degrees;            // shifted homogeneous degree per column
    bool truncated = false;
    std::optional<Degree> degree_bound;
};

inline SyzygyBasis syzygy_basis(const PolyMatrix& a,
                                std::optional<Degree> degree_bound = std::nullopt,
                                const detail::GBOptions& opts = {}) {
    const RingPtr& ring = a.ring();
    const std::size_t k = a.rows(), m = a.cols();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (!homogeneity(a.at(i, j)).is_homogeneous)
                fail(ErrorCode::NonHomogeneousInput, "syzygy input entry is not homogeneous");

    struct Lifted {
        VecPoly u, w;
    };
    std::vector<Lifted> basis;
    std::vector<VecPoly> syzygies;
    std::set<std::tuple<Degree, std::size_t, std::size_t, std::size_t>> pairs;
    std::size_t counter = 0;

    auto add_pairs_for = [&](std::size_t j) {
        const ModLead lj = mod_lead(basis[j].u);
        for (std::size_t i = 0; i < j; ++i) {
            const ModLead li = mod_lead(basis[i].u);
            if (li.pos != lj.pos) continue;
            // no coprimality shortcut here: skipped pairs would lose their
            // (Koszul-type) syzygies
            pairs.emplace(Monomial::lcm(li.mono, lj.mono).degree(), counter++, i, j);
        }
    };

    for (std::size_t j = 0; j < m; ++j) {
        VecPoly u{a.column(j)};
        VecPoly w = VecPoly::unit(ring, m, j);
        if (u.is_zero()) {
            syzygies.push_back(std::move(w)); // zero column: e_j annihilates
            continue;
        }
        const Scalar inv = mod_lead(u).coeff.inverse();
        const Monomial one(ring->nvars());
        basis.push_back({u.times_term(one, inv), w.times_term(one, inv)});
        add_pairs_for(basis.size() - 1);
    }

    std::size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > opts.pair_limit)
            fail(ErrorCode::PairLimitExceeded, "syzygy pair limit exceeded");
        auto [deg, idx, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        const ModLead li = mod_lead(basis[i].u);
        const ModLead lj = mod_lead(basis[j].u);
        const Monomial lcm = Monomial::lcm(li.mono, lj.mono);
        const Scalar one_c = Scalar::one(ring->field);
        VecPoly su = basis[i].u.times_term(lcm / li.mono, one_c) -
                     basis[j].u.times_term(lcm / lj.mono, one_c);
        VecPoly sw = basis[i].w.times_term(lcm / li.mono, one_c) -
                     basis[j].w.times_term(lcm / lj.mono, one_c);
        std::vector<VecPoly> us;
        us.reserve(basis.size());
        for (const Lifted& l : basis) us.push_back(l.u);
        VecPoly r = detail::normal_form_impl(
            std::move(su), us,
            [&](std::size_t l, const Monomial& q, const Scalar& c) {
                sw = sw - basis[l].w.times_term(q, c);
            });
        if (r.is_zero()) {
            if (!sw.is_zero()) syzygies.push_back(std::move(sw));
            continue;
        }
        const Scalar inv = mod_lead(r).coeff.inverse();
        const Monomial one(ring->nvars());
        basis.push_back({r.times_term(one, inv), sw.times_term(one, inv)});
        add_pairs_for(basis.size() - 1);
    }

    // Canonical generating set: the reduced module basis of the collected
    // syzygies.
    GroebnerBasis canon = buchberger_module(syzygies, ring, m, opts);

    std::vector<Degree> shifts(m, 0);
    if (a.col_degrees()) shifts = *a.col_degrees();

    SyzygyBasis out;
    out.degree_bound = degree_bound;
    struct Entry {
        Degree deg;
        VecPoly v;
    };
    std::vector<Entry> entries;
    for (const VecPoly& v : canon.gens) {
        Degree e = kNegInfinity;
        for (std::size_t j = 0; j < m; ++j) {
            if (v.comps[j].is_zero()) continue;
            auto h = homogeneity(v.comps[j]);
            Degree ej = h.degree + shifts[j];
            if (!h.is_homogeneous || (e != kNegInfinity && e != ej))
                fail(ErrorCode::NonHomogeneousInput, "syzygy generator is not graded");
            e = ej;
        }
        entries.push_back({e, v});
    }
    std::stable_sort(entries.begin(), entries.end(), [&](const Entry& x, const Entry& y) {
        if (x.deg != y.deg) return x.deg < y.deg;
        return mod_lead_compare(mod_lead(x.v), mod_lead(y.v), ring->order) < 0;
    });
    for (Entry& e : entries) {
        if (degree_bound && e.deg > *degree_bound) {
            out.truncated = true;
            continue;
        }
        out.columns.push_back(std::move(e.v.comps));
        out.degrees.push_back(e.deg);
    }
    return out;
}

/// Verifies a.v = 0 for a syzygy column.
inline bool annihilates(const PolyMatrix& a, const std::vector<Poly>& v) {
    PolyMatrix col(a.ring(), a.cols(), 1);
    for (std::size_t j = 0; j < a.cols(); ++j) col.set(j, 0, v[j]);
    return mat_mul(a, col).is_zero();
}

struct IndependenceResult {
    bool independent;
    std::optional<Poly> witness; // relation in the auxiliary y-variables
};

/// Decides algebraic independence through the elimination ideal of
/// {y_i - f_i}: the sequence is independent iff no reduced basis element is
/// free of the original variables. Authoritative in every characteristic.
inline IndependenceResult algebraic_independence(const std::vector<Poly>& polys,
                                                 const detail::GBOptions& opts = {}) {
    if (polys.empty()) fail(ErrorCode::InvalidProblem, "empty sequence");
    const RingPtr& R = polys[0].ring();
    for (const Poly& f : polys) require_same_ring(R, f.ring());
    const std::size_t n = R->nvars(), k = polys.size();

    std::string prefix = "y";
    auto collides = [&](const std::string& pre) {
        for (std::size_t i = 1; i <= k; ++i) {
            std::string cand = pre + std::to_string(i);
            for (const auto& v : R->vars)
                if (v == cand) return true;
        }
        return false;
    };
    while (collides(prefix)) prefix += "y";

    std::vector<std::string> ext_vars = R->vars;
    std::vector<std::string> y_vars;
    for (std::size_t i = 1; i <= k; ++i) {
        y_vars.push_back(prefix + std::to_string(i));
        ext_vars.push_back(y_vars.back());
    }
    RingPtr ext = make_ring(R->field, ext_vars,
                            MonomialOrder::block_elim(static_cast<std::uint32_t>(n)));

    std::vector<Poly> gens;
    for (std::size_t i = 0; i < k; ++i)
        gens.push_back(Poly::variable(ext, n + i) - embed_prefix(polys[i], ext));

    GroebnerBasis gb = buchberger(gens, opts);

    RingPtr yring = make_ring(R->field, y_vars, R->order);
    for (const Poly& g : gb.polys()) {
        bool x_free = true;
        for (const auto& [mono, c] : g.terms()) {
            for (std::size_t j = 0; j < n && x_free; ++j)
                if (mono.exp(j) > 0) x_free = false;
            if (!x_free) break;
        }
        if (!x_free) continue;
        std::vector<Poly::Term> ts;
        for (const auto& [mono, c] : g.terms()) {
            std::vector<std::uint32_t> e(mono.exps().begin() + static_cast<long>(n),
                                         mono.exps().end());
            ts.emplace_back(Monomial(std::move(e)), c);
        }
        return {false, Poly::from_terms(yring, std::move(ts))};
    }
    return {true, std::nullopt};
}

} // namespace logfree
