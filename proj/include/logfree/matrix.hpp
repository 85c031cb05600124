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

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "logfree/gcd.hpp"
#include "logfree/poly.hpp"

namespace logfree {

/// Rectangular matrix over the polynomial ring, with optional graded
/// metadata: entry (i,j) is zero or homogeneous of degree
/// row_degrees[i] + column_degrees[j].
class PolyMatrix {
public:
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          entries_(rows * cols, Poly::zero(ring_)) {}

    static PolyMatrix from_rows(RingPtr ring, const std::vector<std::vector<Poly>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows[0].size();
        PolyMatrix m(std::move(ring), r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }

    static PolyMatrix identity(RingPtr ring, std::size_t n) {
        PolyMatrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, Poly::constant(ring, 1));
        return m;
    }

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    void set(std::size_t i, std::size_t j, Poly p) {
        require_same_ring(ring_, p.ring());
        entries_[i * cols_ + j] = std::move(p);
    }

    const std::optional<std::vector<Degree>>& row_degrees() const { return row_degrees_; }
    const std::optional<std::vector<Degree>>& col_degrees() const { return col_degrees_; }

    PolyMatrix& with_degrees(std::vector<Degree> row_deg, std::vector<Degree> col_deg) {
        if (row_deg.size() != rows_ || col_deg.size() != cols_)
            fail(ErrorCode::DimensionMismatch, "degree metadata size mismatch");
        row_degrees_ = std::move(row_deg);
        col_degrees_ = std::move(col_deg);
        validate_graded();
        return *this;
    }

    /// Checks the graded-matrix invariant against the attached metadata.
    void validate_graded() const {
        if (!row_degrees_ || !col_degrees_) return;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                const Poly& e = at(i, j);
                if (e.is_zero()) continue;
                auto h = homogeneity(e);
                if (!h.is_homogeneous || h.degree != (*row_degrees_)[i] + (*col_degrees_)[j])
                    fail(ErrorCode::NonHomogeneousInput,
                         "matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") violates the graded structure");
            }
        }
    }

    bool is_zero() const {
        for (const Poly& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    std::vector<Poly> column(std::size_t j) const {
        std::vector<Poly> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
        return c;
    }

    PolyMatrix submatrix(const std::vector<std::size_t>& rsel,
                         const std::vector<std::size_t>& csel) const {
        PolyMatrix m(ring_, rsel.size(), csel.size());
        for (std::size_t i = 0; i < rsel.size(); ++i)
            for (std::size_t j = 0; j < csel.size(); ++j) m.set(i, j, at(rsel[i], csel[j]));
        return m;
    }

    bool operator==(const PolyMatrix& o) const {
        return same_ring(ring_, o.ring_) && rows_ == o.rows_ && cols_ == o.cols_ &&
               entries_ == o.entries_;
    }

private:
    RingPtr ring_;
    std::size_t rows_, cols_;
    std::vector<Poly> entries_;
    std::optional<std::vector<Degree>> row_degrees_, col_degrees_;
};

inline PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.cols() != b.rows())
        fail(ErrorCode::DimensionMismatch,
             "inner dimensions differ: " + std::to_string(a.cols()) + " vs " +
                 std::to_string(b.rows()));
    PolyMatrix m(a.ring(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Poly s = Poly::zero(a.ring());
            for (std::size_t t = 0; t < a.cols(); ++t) s += a.at(i, t) * b.at(t, j);
            m.set(i, j, std::move(s));
        }
    }
    // Grading composes when the inner twists cancel (our convention stores
    // source twists on columns and target twists on rows).
    if (a.row_degrees() && a.col_degrees() && b.row_degrees() && b.col_degrees()) {
        bool cancel = true;
        for (std::size_t t = 0; t < a.cols(); ++t)
            if ((*a.col_degrees())[t] + (*b.row_degrees())[t] != 0) cancel = false;
        if (cancel && !m.is_zero()) m.with_degrees(*a.row_degrees(), *b.col_degrees());
    }
    return m;
}

inline PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) { return mat_mul(a, b); }

/// Horizontal concatenation (a | b); keeps grading when row twists agree.
inline PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.rows() != b.rows()) fail(ErrorCode::DimensionMismatch, "row counts differ");
    PolyMatrix m(a.ring(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) m.set(i, a.cols() + j, b.at(i, j));
    }
    if (a.row_degrees() && b.row_degrees() && *a.row_degrees() == *b.row_degrees() &&
        a.col_degrees() && b.col_degrees()) {
        std::vector<Degree> cd = *a.col_degrees();
        cd.insert(cd.end(), b.col_degrees()->begin(), b.col_degrees()->end());
        m.with_degrees(*a.row_degrees(), std::move(cd));
    }
    return m;
}

enum class DetMethod { Bareiss, Cofactor };

inline DetMethod det_method_from_name(const std::string& name) {
    if (name == "bareiss") return DetMethod::Bareiss;
    if (name == "cofactor") return DetMethod::Cofactor;
    fail(ErrorCode::InvalidProblem, "unknown determinant method '" + name + "'");
}

namespace detail {

// Fraction-free Gaussian elimination; every division is exact in the
// polynomial ring, so the result is computed without fractions.
inline Poly det_bareiss(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Poly::constant(m.ring(), 1);
    std::vector<std::vector<Poly>> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j) w[i].push_back(m.at(i, j));
    }
    bool negate = false;
    Poly prev = Poly::constant(m.ring(), 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && w[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return Poly::zero(m.ring());
        if (pivot != k) {
            std::swap(w[pivot], w[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                w[i][j] = exact_divide(w[k][k] * w[i][j] - w[i][k] * w[k][j], prev);
            }
            w[i][k] = Poly::zero(m.ring());
        }
        prev = w[k][k];
    }
    return negate ? -w[n - 1][n - 1] : w[n - 1][n - 1];
}

// Laplace expansion along rows, memoized on the surviving column subset.
// Skips zero entries, which makes it the better path for sparse matrices
// and an independent oracle for Bareiss.
inline Poly det_cofactor(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Poly::constant(m.ring(), 1);
    std::unordered_map<std::uint64_t, Poly> memo;
    auto rec = [&](auto&& self, std::uint64_t colmask) -> Poly {
        const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(colmask));
        if (k == 0) return Poly::constant(m.ring(), 1);
        auto it = memo.find(colmask);
        if (it != memo.end()) return it->second;
        const std::size_t row = n - k;
        Poly acc = Poly::zero(m.ring());
        bool plus = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(colmask & (std::uint64_t{1} << j))) continue;
            const Poly& e = m.at(row, j);
            if (!e.is_zero()) {
                Poly sub = self(self, colmask & ~(std::uint64_t{1} << j));
                acc = plus ? acc + e * sub : acc - e * sub;
            }
            plus = !plus;
        }
        memo.emplace(colmask, acc);
        return acc;
    };
    const std::uint64_t full = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return rec(rec, full);
}

inline void subsets_in_lex_order(std::size_t n, std::size_t r,
                                 const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    if (r > n) return;
    while (true) {
        if (!visit(idx)) return;
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace detail

inline Poly determinant(const PolyMatrix& m, DetMethod method = DetMethod::Bareiss) {
    if (m.rows() != m.cols())
        fail(ErrorCode::NotSquare, "determinant of a " + std::to_string(m.rows()) + "x" +
                                       std::to_string(m.cols()) + " matrix");
    if (m.rows() >= 64) fail(ErrorCode::DimensionMismatch, "matrix too large");
    return method == DetMethod::Bareiss ? detail::det_bareiss(m) : detail::det_cofactor(m);
}

/// All r x r minors in lexicographic order of (row subset, column subset).
inline std::vector<Poly> maximal_minors(const PolyMatrix& m,
                                        std::optional<std::size_t> r_opt = std::nullopt,
                                        DetMethod method = DetMethod::Bareiss) {
    const std::size_t r = r_opt.value_or(std::min(m.rows(), m.cols()));
    if (r > std::min(m.rows(), m.cols()))
        fail(ErrorCode::RankTooLarge, "minor size " + std::to_string(r) + " exceeds matrix");
    std::vector<Poly> minors;
    detail::subsets_in_lex_order(m.rows(), r, [&](const std::vector<std::size_t>& rsel) {
        detail::subsets_in_lex_order(m.cols(), r, [&](const std::vector<std::size_t>& csel) {
            minors.push_back(determinant(m.submatrix(rsel, csel), method));
            return true;
        });
        return true;
    });
    return minors;
}

/// Rank over the fraction field: the largest r with a nonzero r x r minor.
/// Scans sizes descending and stops at the first nonzero minor.
inline std::size_t generic_rank(const PolyMatrix& m, DetMethod method = DetMethod::Bareiss) {
    std::size_t nz_rows = 0, nz_cols = 0;
    std::vector<bool> col_nz(m.cols(), false);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool row_nz = false;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m.at(i, j).is_zero()) {
                row_nz = true;
                col_nz[j] = true;
            }
        }
        if (row_nz) ++nz_rows;
    }
    for (bool b : col_nz) nz_cols += b ? 1 : 0;
    for (std::size_t r = std::min(nz_rows, nz_cols); r >= 1; --r) {
        bool found = false;
        detail::subsets_in_lex_order(m.rows(), r, [&](const std::vector<std::size_t>& rsel) {
            detail::subsets_in_lex_order(m.cols(), r, [&](const std::vector<std::size_t>& csel) {
                if (!determinant(m.submatrix(rsel, csel), method).is_zero()) {
                    found = true;
                    return false;
                }
                return true;
            });
            return !found;
        });
        if (found) return r;
    }
    return 0;
}

/// The divisor cut out by a morphism of sheaves presented as a polynomial
/// matrix: the monic gcd of its maximal minors at the generic rank.
struct DivisorClass {
    Poly equation;
    Degree degree;
};

inline DivisorClass divisor_of_map(const PolyMatrix& m, DetMethod method = DetMethod::Bareiss) {
    if (m.is_zero()) fail(ErrorCode::ZeroMatrix, "divisor of the zero map");
    const std::size_t r = generic_rank(m, method);
    Poly g = gcd_multivariate(maximal_minors(m, r, method));
    const Degree d = g.total_degree();
    return {std::move(g), d};
}

/// Jacobian of a polynomial family: row i holds the partials of fs[i].
/// Graded with row degree deg(f_i) - 1 and column degree 0.
inline PolyMatrix jacobian(const std::vector<Poly>& fs) {
    if (fs.empty()) fail(ErrorCode::InvalidProblem, "jacobian of an empty family");
    const RingPtr& R = fs[0].ring();
    const std::size_t n1 = R->nvars();
    PolyMatrix m(R, fs.size(), n1);
    std::vector<Degree> row_deg;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        require_same_ring(R, fs[i].ring());
        auto h = homogeneity(fs[i]);
        if (!h.is_homogeneous || fs[i].is_zero())
            fail(ErrorCode::NonHomogeneousInput,
                 "family member " + std::to_string(i) + " is not nonzero homogeneous");
        row_deg.push_back(h.degree - 1);
        for (std::size_t j = 0; j < n1; ++j) m.set(i, j, partial_derivative(fs[i], j));
    }
    m.with_degrees(std::move(row_deg), std::vector<Degree>(n1, 0));
    return m;
}

} // namespace logfree
