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

#include <cstddef>
#include <vector>

#include "logfree/poly.hpp"

namespace logfree {

/**
 * Multivariate GCD via the subresultant polynomial remainder sequence,
 * recursing over k[x_last][remaining variables].
 *
 * The recursion picks the highest variable appearing in either operand as
 * the main variable, splits both operands into content and primitive part
 * with respect to it, runs the subresultant PRS on the primitive parts and
 * recurses on the contents. Every division along the way is exact, so the
 * computation is deterministic and works over the rationals and over prime
 * fields alike. Results are normalized monic under the active order, which
 * turns "equal up to a unit" into literal equality.
 */

namespace detail {

// Highest variable index occurring in f, or npos for constants.
inline std::size_t lead_var(const Poly& f) {
    std::size_t best = static_cast<std::size_t>(-1);
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t j = m.nvars(); j-- > 0;) {
            if (m.exp(j) > 0) {
                if (best == static_cast<std::size_t>(-1) || j > best) best = j;
                break;
            }
        }
    }
    return best;
}

inline std::uint32_t deg_in(const Poly& f, std::size_t v) {
    std::uint32_t d = 0;
    for (const auto& [m, c] : f.terms()) d = std::max(d, m.exp(v));
    return d;
}

// Coefficient of x_v^k in f, as a polynomial free of x_v.
inline Poly coeff_in(const Poly& f, std::size_t v, std::uint32_t k) {
    std::vector<Poly::Term> out;
    for (const auto& [m, c] : f.terms()) {
        if (m.exp(v) != k) continue;
        auto e = m.exps();
        e[v] = 0;
        out.emplace_back(Monomial(std::move(e)), c);
    }
    return Poly::from_terms(f.ring(), std::move(out));
}

inline Poly shift_in(const Poly& f, std::size_t v, std::uint32_t k) {
    std::vector<Poly::Term> out;
    out.reserve(f.terms().size());
    for (const auto& [m, c] : f.terms()) {
        auto e = m.exps();
        e[v] += k;
        out.emplace_back(Monomial(std::move(e)), c);
    }
    return Poly::from_terms(f.ring(), std::move(out));
}

// Pseudo-remainder of A by B in the main variable v:
// prem(A,B) = lc(B)^(degA-degB+1) * A  mod B, computed without fractions.
inline Poly prem(const Poly& A, const Poly& B, std::size_t v) {
    const std::uint32_t dB = deg_in(B, v);
    const Poly lb = coeff_in(B, v, dB);
    Poly R = A;
    long e = static_cast<long>(deg_in(A, v)) - static_cast<long>(dB) + 1;
    while (!R.is_zero() && deg_in(R, v) >= dB) {
        const std::uint32_t dR = deg_in(R, v);
        const Poly lr = coeff_in(R, v, dR);
        R = lb * R - shift_in(lr, v, dR - dB) * B;
        --e;
    }
    if (e > 0) R = poly_pow(lb, static_cast<unsigned long>(e)) * R;
    return R;
}

Poly gcd_pair_monic(const Poly& a, const Poly& b);

// GCD of the x_v-coefficients of f; monic.
inline Poly content_in(const Poly& f, std::size_t v) {
    Poly g = Poly::zero(f.ring());
    for (std::uint32_t k = 0; k <= deg_in(f, v); ++k) {
        Poly c = coeff_in(f, v, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd_pair_monic(g, c);
        if (g.is_constant()) return Poly::constant(f.ring(), 1);
    }
    return g;
}

// Subresultant PRS on x_v-primitive inputs; returns the primitive part of
// the last nonzero remainder (the gcd up to content, handled by the caller).
inline Poly subresultant_prs(Poly A, Poly B, std::size_t v) {
    if (deg_in(A, v) < deg_in(B, v)) std::swap(A, B);
    Poly g = Poly::constant(A.ring(), 1);
    Poly h = g;
    while (true) {
        const std::uint32_t d = deg_in(A, v) - deg_in(B, v);
        Poly R = prem(A, B, v);
        if (R.is_zero()) {
            return exact_divide(B, content_in(B, v));
        }
        if (deg_in(R, v) == 0) {
            return Poly::constant(A.ring(), 1);
        }
        A = B;
        B = exact_divide(R, g * poly_pow(h, d));
        g = coeff_in(A, v, deg_in(A, v));
        if (d >= 1) h = d == 1 ? g : exact_divide(poly_pow(g, d), poly_pow(h, d - 1));
    }
}

inline Poly gcd_pair_monic(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.ring(), 1);

    const std::size_t v = std::max(lead_var(a), lead_var(b));
    if (deg_in(a, v) == 0) return gcd_pair_monic(a, content_in(b, v));
    if (deg_in(b, v) == 0) return gcd_pair_monic(content_in(a, v), b);

    const Poly ca = content_in(a, v);
    const Poly cb = content_in(b, v);
    const Poly c = gcd_pair_monic(ca, cb);
    const Poly g = subresultant_prs(exact_divide(a, ca), exact_divide(b, cb), v);
    return (c * g).monic();
}

} // namespace detail

/// GCD of a nonempty family, normalized monic under the active order.
/// Zero entries are ignored; the gcd of an all-zero family is 0.
inline Poly gcd_multivariate(const std::vector<Poly>& fs) {
    if (fs.empty()) fail(ErrorCode::InvalidProblem, "gcd of an empty family");
    for (std::size_t i = 1; i < fs.size(); ++i) require_same_ring(fs[0].ring(), fs[i].ring());
    Poly g = Poly::zero(fs[0].ring());
    for (const Poly& f : fs) {
        if (f.is_zero()) continue;
        g = g.is_zero() ? f.monic() : detail::gcd_pair_monic(g, f);
        if (g.is_constant() && !g.is_zero()) return Poly::constant(fs[0].ring(), 1);
    }
    return g;
}

inline Poly gcd_multivariate(const Poly& a, const Poly& b) {
    return gcd_multivariate(std::vector<Poly>{a, b});
}

} // namespace logfree
