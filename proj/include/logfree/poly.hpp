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

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "logfree/error.hpp"
#include "logfree/field.hpp"
#include "logfree/monomial.hpp"

namespace logfree {

/// Coefficient field + ordered variable list + active monomial order.
/// Rings are immutable; polynomials share them by pointer but compare them
/// by value, so independently built rings interoperate.
struct Ring {
    FieldSpec field;
    std::vector<std::string> vars;
    MonomialOrder order;

    std::size_t nvars() const { return vars.size(); }
    bool operator==(const Ring&) const = default;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(FieldSpec field, std::vector<std::string> vars,
                         MonomialOrder order = MonomialOrder::grevlex()) {
    return std::make_shared<const Ring>(Ring{std::move(field), std::move(vars), order});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (same_ring(a, b)) return;
    if (a->field != b->field)
        fail(ErrorCode::FieldMismatch, "coefficient fields differ: " + a->field.str() + " vs " + b->field.str());
    if (a->vars != b->vars)
        fail(ErrorCode::VariableListMismatch, "variable lists differ");
    fail(ErrorCode::OrderMismatch,
         "monomial orders differ: " + a->order.name() + " vs " + b->order.name());
}

/// Sparse multivariate polynomial in canonical form: nonzero terms only,
/// strictly descending in the ring's monomial order.
class Poly {
public:
    using Term = std::pair<Monomial, Scalar>;

    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }

    static Poly constant(RingPtr ring, Scalar c) {
        Poly p(ring);
        if (!c.is_zero()) p.terms_.emplace_back(Monomial(ring->nvars()), std::move(c));
        return p;
    }

    static Poly constant(RingPtr ring, long v) {
        return constant(ring, Scalar::of_int(ring->field, v));
    }

    static Poly variable(RingPtr ring, std::size_t j) {
        if (j >= ring->nvars())
            fail(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(j) + " out of range");
        std::vector<std::uint32_t> e(ring->nvars(), 0);
        e[j] = 1;
        Poly p(ring);
        p.terms_.emplace_back(Monomial(std::move(e)), Scalar::one(ring->field));
        return p;
    }

    static Poly term(RingPtr ring, Monomial m, Scalar c) {
        Poly p(ring);
        if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
        return p;
    }

    /// Normalizes an arbitrary term list (sorts, merges, drops zeros).
    static Poly from_terms(RingPtr ring, std::vector<Term> terms) {
        Poly p(ring);
        std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return mono_compare(a.first, b.first, ring->order) > 0;
        });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first) {
                p.terms_.back().second += t.second;
                if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
            } else if (!t.second.is_zero()) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
    }

    const Monomial& leading_monomial() const {
        if (is_zero()) fail(ErrorCode::InternalError, "leading term of zero polynomial");
        return terms_.front().first;
    }
    const Scalar& leading_coefficient() const {
        if (is_zero()) fail(ErrorCode::InternalError, "leading term of zero polynomial");
        return terms_.front().second;
    }

    Degree total_degree() const {
        if (is_zero()) return kNegInfinity;
        Degree d = kNegInfinity;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool operator==(const Poly& o) const {
        return same_ring(ring_, o.ring_) && terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly p(ring_);
        p.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) p.terms_.emplace_back(m, -c);
        return p;
    }

    Poly operator+(const Poly& o) const {
        require_same_ring(ring_, o.ring_);
        Poly p(ring_);
        p.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = mono_compare(terms_[i].first, o.terms_[j].first, ring_->order);
            if (c > 0) {
                p.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                p.terms_.push_back(o.terms_[j++]);
            } else {
                Scalar s = terms_[i].second + o.terms_[j].second;
                if (!s.is_zero()) p.terms_.emplace_back(terms_[i].first, std::move(s));
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) p.terms_.push_back(o.terms_[j]);
        return p;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        require_same_ring(ring_, o.ring_);
        std::vector<Term> prods;
        prods.reserve(terms_.size() * o.terms_.size());
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) prods.emplace_back(ma * mb, ca * cb);
        return from_terms(ring_, std::move(prods));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Multiply by a single term (no merging needed: term maps stay sorted).
    Poly times_term(const Monomial& m, const Scalar& c) const {
        Poly p(ring_);
        if (c.is_zero()) return p;
        p.terms_.reserve(terms_.size());
        for (const auto& [mm, cc] : terms_) {
            Scalar s = cc * c;
            if (!s.is_zero()) p.terms_.emplace_back(mm * m, std::move(s));
        }
        return p;
    }

    Poly times_scalar(const Scalar& c) const { return times_term(Monomial(ring_->nvars()), c); }

    /// Scale so the leading coefficient is 1; zero stays zero.
    Poly monic() const {
        if (is_zero()) return *this;
        return times_scalar(leading_coefficient().inverse());
    }

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

inline Poly poly_pow(const Poly& base, unsigned long e) {
    Poly acc = Poly::constant(base.ring(), 1);
    Poly b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

struct Homogeneity {
    bool is_homogeneous;
    Degree degree; // kNegInfinity for zero; meaningful only when homogeneous
};

inline Homogeneity homogeneity(const Poly& f) {
    if (f.is_zero()) return {true, kNegInfinity};
    const Degree d = f.terms().front().first.degree();
    for (const auto& [m, c] : f.terms())
        if (m.degree() != d) return {false, kNegInfinity};
    return {true, d};
}

inline Poly partial_derivative(const Poly& f, std::size_t j) {
    if (j >= f.ring()->nvars())
        fail(ErrorCode::IndexOutOfRange, "derivative index " + std::to_string(j) + " out of range");
    std::vector<Poly::Term> out;
    for (const auto& [m, c] : f.terms()) {
        const std::uint32_t e = m.exp(j);
        if (e == 0) continue;
        Scalar s = c * Scalar::of_int(f.ring()->field, static_cast<long>(e));
        if (s.is_zero()) continue; // characteristic divides the exponent
        auto exps = m.exps();
        exps[j] -= 1;
        out.emplace_back(Monomial(std::move(exps)), std::move(s));
    }
    return Poly::from_terms(f.ring(), std::move(out));
}

/// The Euler derivation applied to f: sum_j x_j * d f / d x_j.
/// Equals (deg f mod char) * f for homogeneous f.
inline Poly euler_apply(const Poly& f) {
    Poly acc = Poly::zero(f.ring());
    for (std::size_t j = 0; j < f.ring()->nvars(); ++j)
        acc += Poly::variable(f.ring(), j) * partial_derivative(f, j);
    return acc;
}

/// Exact quotient a / b. Runs full multivariate division by the single
/// divisor b and demands a zero remainder; on failure the thrown error
/// carries the canonical remainder as a witness (filled in by the caller
/// via printing, see parser.hpp).
struct DivisionResult {
    Poly quotient;
    Poly remainder;
};

inline DivisionResult divide_with_remainder(const Poly& a, const Poly& b) {
    require_same_ring(a.ring(), b.ring());
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero polynomial");
    Poly q = Poly::zero(a.ring());
    Poly rem = Poly::zero(a.ring());
    Poly r = a;
    const Monomial& lmb = b.leading_monomial();
    const Scalar lcb_inv = b.leading_coefficient().inverse();
    while (!r.is_zero()) {
        const Monomial& lm = r.leading_monomial();
        if (lmb.divides(lm)) {
            Scalar c = r.leading_coefficient() * lcb_inv;
            Monomial m = lm / lmb;
            Poly t = Poly::term(a.ring(), m, c);
            q += t;
            r -= b.times_term(m, c);
        } else {
            Poly lt = Poly::term(a.ring(), lm, r.leading_coefficient());
            rem += lt;
            r -= lt;
        }
    }
    return {std::move(q), std::move(rem)};
}

/// Canonical printing: terms descending in the active order, coefficient
/// before the monomial, `*` explicit, exponent 1 elided. Parsing this
/// string back yields the identical polynomial.
inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    const auto& vars = p.ring()->vars;
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Scalar mag = c;
        if (first) {
            if (c.is_negative()) {
                out += "-";
                mag = -c;
            }
        } else {
            if (c.is_negative()) {
                out += " - ";
                mag = -c;
            } else {
                out += " + ";
            }
        }
        first = false;
        if (m.is_one()) {
            out += mag.str();
        } else {
            bool star = false;
            if (!mag.is_one()) {
                out += mag.str();
                star = true;
            }
            for (std::size_t j = 0; j < m.nvars(); ++j) {
                if (m.exp(j) == 0) continue;
                if (star) out += "*";
                out += vars[j];
                if (m.exp(j) > 1) out += "^" + std::to_string(m.exp(j));
                star = true;
            }
        }
    }
    return out;
}

inline Poly exact_divide(const Poly& a, const Poly& b) {
    DivisionResult d = divide_with_remainder(a, b);
    if (!d.remainder.is_zero()) {
        throw Error(ErrorCode::NotDivisible, "polynomial division left a nonzero remainder")
            .with_witness(to_string(d.remainder));
    }
    return d.quotient;
}

/// Re-sorts a polynomial into a ring with a different active order
/// (same field and variables).
inline Poly with_order(const Poly& f, const MonomialOrder& order) {
    if (f.ring()->order == order) return f;
    RingPtr r2 = make_ring(f.ring()->field, f.ring()->vars, order);
    std::vector<Poly::Term> ts(f.terms().begin(), f.terms().end());
    return Poly::from_terms(r2, std::move(ts));
}

/// Transplants f into ring `to`, which must contain f's variables as a
/// prefix (used for the elimination ring of the independence test).
inline Poly embed_prefix(const Poly& f, const RingPtr& to) {
    if (f.ring()->field != to->field) fail(ErrorCode::FieldMismatch, "embedding across fields");
    const std::size_t n_from = f.ring()->nvars(), n_to = to->nvars();
    if (n_from > n_to ||
        !std::equal(f.ring()->vars.begin(), f.ring()->vars.end(), to->vars.begin()))
        fail(ErrorCode::VariableListMismatch, "ring is not a prefix extension");
    std::vector<Poly::Term> ts;
    ts.reserve(f.terms().size());
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::uint32_t> e(n_to, 0);
        std::copy(m.exps().begin(), m.exps().end(), e.begin());
        ts.emplace_back(Monomial(std::move(e)), c);
    }
    return Poly::from_terms(to, std::move(ts));
}

} // namespace logfree
