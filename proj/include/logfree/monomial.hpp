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
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "logfree/error.hpp"

namespace logfree {

/// Total degree of a polynomial; the zero polynomial gets the sentinel
/// kNegInfinity, which compares below every genuine degree.
using Degree = std::int64_t;
inline constexpr Degree kNegInfinity = std::numeric_limits<Degree>::min();

/// Exponent vector of a power product, one entry per ring variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t exp(std::size_t j) const { return exps_[j]; }
    const std::vector<std::uint32_t>& exps() const { return exps_; }

    Degree degree() const {
        Degree d = 0;
        for (auto e : exps_) d += e;
        return d;
    }

    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(exps_);
        for (std::size_t j = 0; j < exps_.size(); ++j) r.exps_[j] += o.exps_[j];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t j = 0; j < exps_.size(); ++j)
            if (exps_[j] > o.exps_[j]) return false;
        return true;
    }

    /// Exact quotient this / o; caller guarantees o.divides(*this).
    Monomial operator/(const Monomial& o) const {
        Monomial r(exps_);
        for (std::size_t j = 0; j < exps_.size(); ++j) r.exps_[j] -= o.exps_[j];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.exps_);
        for (std::size_t j = 0; j < r.exps_.size(); ++j)
            r.exps_[j] = std::max(r.exps_[j], b.exps_[j]);
        return r;
    }

    bool operator==(const Monomial&) const = default;

private:
    std::vector<std::uint32_t> exps_;
};

enum class OrderKind { GrevLex, Lex, GradedLex, BlockElim };

/// A monomial order. The three public kinds are total orders on a single
/// variable block; BlockElim is the internal elimination order (first block
/// grevlex, ties broken by grevlex on the rest) used by the independence test.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::uint32_t block_split = 0; // BlockElim: size of the eliminated block

    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder graded_lex() { return {OrderKind::GradedLex, 0}; }
    static MonomialOrder block_elim(std::uint32_t split) { return {OrderKind::BlockElim, split}; }

    std::string name() const {
        switch (kind) {
            case OrderKind::GrevLex: return "grevlex";
            case OrderKind::Lex: return "lex";
            case OrderKind::GradedLex: return "gradedlex";
            case OrderKind::BlockElim:
                return "block-elim/" + std::to_string(block_split);
        }
        return "?";
    }

    bool operator==(const MonomialOrder&) const = default;
};

inline MonomialOrder order_from_name(const std::string& name) {
    if (name == "grevlex") return MonomialOrder::grevlex();
    if (name == "lex") return MonomialOrder::lex();
    if (name == "gradedlex") return MonomialOrder::graded_lex();
    fail(ErrorCode::InvalidProblem, "unknown monomial order '" + name + "'");
}

namespace detail {

// Degree-reverse-lexicographic comparison restricted to variables [lo, hi).
inline int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    Degree da = 0, db = 0;
    for (std::size_t j = lo; j < hi; ++j) {
        da += a.exp(j);
        db += b.exp(j);
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t j = hi; j-- > lo;) {
        if (a.exp(j) != b.exp(j)) return a.exp(j) > b.exp(j) ? -1 : 1;
    }
    return 0;
}

inline int lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t j = lo; j < hi; ++j) {
        if (a.exp(j) != b.exp(j)) return a.exp(j) < b.exp(j) ? -1 : 1;
    }
    return 0;
}

} // namespace detail

/// Three-way comparison under `o`: negative when a < b, 0 when equal,
/// positive when a > b.
inline int mono_compare(const Monomial& a, const Monomial& b, const MonomialOrder& o) {
    const std::size_t n = a.nvars();
    switch (o.kind) {
        case OrderKind::GrevLex:
            return detail::grevlex_range(a, b, 0, n);
        case OrderKind::Lex:
            return detail::lex_range(a, b, 0, n);
        case OrderKind::GradedLex: {
            const Degree da = a.degree(), db = b.degree();
            if (da != db) return da < db ? -1 : 1;
            return detail::lex_range(a, b, 0, n);
        }
        case OrderKind::BlockElim: {
            const std::size_t s = std::min<std::size_t>(o.block_split, n);
            if (int c = detail::grevlex_range(a, b, 0, s)) return c;
            return detail::grevlex_range(a, b, s, n);
        }
    }
    return 0;
}

} // namespace logfree
