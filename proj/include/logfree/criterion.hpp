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

#include <optional>
#include <string>
#include <vector>

#include "logfree/gcd.hpp"
#include "logfree/groebner.hpp"
#include "logfree/matrix.hpp"
#include "logfree/parser.hpp"

namespace logfree {

/**
 * The freeness engine. Given a sequence of homogeneous polynomials with
 * Jacobian matrix A, a matrix of Jacobian syzygies nu (A.nu = 0) and a
 * complement gamma with A.gamma injective, the concatenation
 * theta = (nu | gamma) satisfies
 *
 *     gcd(minors(theta)) * gcd(minors(A)) = h * gcd(minors(A.gamma))
 *
 * for a homogeneous polynomial h, and a degree-zero nonzero h certifies
 * that the kernel sheaf of A splits as a direct sum of line bundles with
 * twists read off nu's column degrees. The divisor variant appends the
 * Euler column to n syzygies and tests det(theta) = h * f directly.
 */

/// The sequence sigma = (f_1, ..., f_k) with its degree bookkeeping.
class SequenceSpec {
public:
    explicit SequenceSpec(std::vector<Poly> polys) : polys_(std::move(polys)) {
        if (polys_.empty()) fail(ErrorCode::InvalidProblem, "empty sequence");
        ring_ = polys_[0].ring();
        for (const Poly& f : polys_) {
            require_same_ring(ring_, f.ring());
            auto h = homogeneity(f);
            if (f.is_zero() || !h.is_homogeneous || h.degree < 1)
                fail(ErrorCode::NonHomogeneousInput,
                     "sequence members must be nonzero homogeneous of degree >= 1");
            degrees_.push_back(h.degree);
            twist_degrees_.push_back(h.degree - 1);
        }
        if (ring_->nvars() < 2)
            fail(ErrorCode::InvalidProblem, "need at least two variables (P^1 or higher)");
        if (polys_.size() > n())
            fail(ErrorCode::LengthMismatch,
                 "sequence length k = " + std::to_string(polys_.size()) +
                     " exceeds the projective dimension n = " + std::to_string(n()));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& polys() const { return polys_; }
    std::size_t k() const { return polys_.size(); }
    std::size_t n() const { return ring_->nvars() - 1; }
    const std::vector<Degree>& degrees() const { return degrees_; }
    const std::vector<Degree>& twist_degrees() const { return twist_degrees_; }

    Degree degree_sum() const {
        Degree s = 0;
        for (Degree d : degrees_) s += d;
        return s;
    }
    Degree twist_sum() const {
        Degree s = 0;
        for (Degree d : twist_degrees_) s += d;
        return s;
    }

private:
    RingPtr ring_;
    std::vector<Poly> polys_;
    std::vector<Degree> degrees_;
    std::vector<Degree> twist_degrees_;
};

inline PolyMatrix jacobian(const SequenceSpec& sigma) { return jacobian(sigma.polys()); }

/// The Euler derivation as a column (x_0, ..., x_n)^T.
inline PolyMatrix euler_column(const RingPtr& ring) {
    const std::size_t n1 = ring->nvars();
    if (n1 < 2) fail(ErrorCode::InvalidProblem, "Euler column needs at least two variables");
    PolyMatrix m(ring, n1, 1);
    for (std::size_t i = 0; i < n1; ++i) m.set(i, 0, Poly::variable(ring, i));
    m.with_degrees(std::vector<Degree>(n1, 0), {1});
    return m;
}

enum class Verdict { Free, NotCertified, PreconditionFailed };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Free: return "Free";
        case Verdict::NotCertified: return "NotCertified";
        case Verdict::PreconditionFailed: return "PreconditionFailed";
    }
    return "?";
}

struct CheckOptions {
    bool assume_independent = false;
    DetMethod method = DetMethod::Bareiss;
    std::optional<Degree> degree_bound; // syzygy search bound for candidate paths
};

struct FreenessCertificate {
    explicit FreenessCertificate(RingPtr r)
        : h(Poly::zero(r)), g_theta(Poly::zero(r)), g_alpha(Poly::zero(r)),
          g_alphagamma(Poly::zero(r)), ring(std::move(r)) {}

    Verdict verdict = Verdict::NotCertified;
    Poly h, g_theta, g_alpha, g_alphagamma;
    std::vector<Degree> splitting_degrees; // twists e_j: summands O(-e_j)
    Degree chern_sum_splitting = 0;        // sum of e_j
    Degree chern_sum_twists = 0;           // sum of d_i minus deg(g_alpha)
    RingPtr ring;
    std::string command;    // "check-divisor" or "check-sequence"
    std::string gamma_kind; // "euler", "block-euler" or "explicit"
    std::vector<std::string> sigma_echo;
    std::vector<std::vector<std::string>> nu_echo, gamma_echo, theta_echo, alpha_echo,
        alphagamma_echo;
    std::vector<std::string> notes;
};

namespace detail {

inline std::vector<std::vector<std::string>> echo_matrix(const PolyMatrix& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(to_string(m.at(i, j)));
    return out;
}

// Column degrees of a matrix mapping into a trivial bundle (row twists 0):
// each column's nonzero entries must share one total degree.
inline std::vector<Degree> infer_column_degrees(const PolyMatrix& m) {
    std::vector<Degree> cd(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Degree d = kNegInfinity;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Poly& e = m.at(i, j);
            if (e.is_zero()) continue;
            auto h = homogeneity(e);
            if (!h.is_homogeneous || (d != kNegInfinity && d != h.degree))
                fail(ErrorCode::NonHomogeneousInput,
                     "column " + std::to_string(j) + " is not homogeneous of a single degree");
            d = h.degree;
        }
        cd[j] = d == kNegInfinity ? 0 : d;
    }
    return cd;
}

inline PolyMatrix with_standard_grading(PolyMatrix m) {
    auto cd = infer_column_degrees(m);
    m.with_degrees(std::vector<Degree>(m.rows(), 0), std::move(cd));
    return m;
}

inline void require_syzygy_columns(const PolyMatrix& alpha, const PolyMatrix& nu) {
    for (std::size_t j = 0; j < nu.cols(); ++j) {
        PolyMatrix col(nu.ring(), nu.rows(), 1);
        for (std::size_t i = 0; i < nu.rows(); ++i) col.set(i, 0, nu.at(i, j));
        if (!mat_mul(alpha, col).is_zero())
            fail(ErrorCode::NotASyzygy,
                 "column " + std::to_string(j) + " of nu is not a Jacobian syzygy");
    }
}

} // namespace detail

/// gamma input: the Euler column, one Euler column per variable block, or
/// an arbitrary explicit matrix.
struct GammaSpec {
    enum class Kind { Euler, BlockEuler, Explicit };
    Kind kind = Kind::Euler;
    std::vector<std::vector<std::string>> partition; // BlockEuler
    std::optional<PolyMatrix> matrix;                // Explicit

    static GammaSpec euler() { return {}; }
    static GammaSpec block_euler(std::vector<std::vector<std::string>> part) {
        GammaSpec g;
        g.kind = Kind::BlockEuler;
        g.partition = std::move(part);
        return g;
    }
    static GammaSpec explicit_matrix(PolyMatrix m) {
        GammaSpec g;
        g.kind = Kind::Explicit;
        g.matrix = std::move(m);
        return g;
    }

    const char* kind_name() const {
        switch (kind) {
            case Kind::Euler: return "euler";
            case Kind::BlockEuler: return "block-euler";
            case Kind::Explicit: return "explicit";
        }
        return "?";
    }
};

/// Checks that `partition` splits the ring variables into disjoint groups
/// covering everything; returns per-variable block indices.
inline std::vector<std::size_t> validate_partition(
    const RingPtr& ring, const std::vector<std::vector<std::string>>& partition) {
    const std::size_t n1 = ring->nvars();
    std::vector<std::size_t> block_of(n1, static_cast<std::size_t>(-1));
    for (std::size_t b = 0; b < partition.size(); ++b) {
        for (const std::string& name : partition[b]) {
            std::size_t idx = n1;
            for (std::size_t j = 0; j < n1; ++j)
                if (ring->vars[j] == name) idx = j;
            if (idx == n1)
                fail(ErrorCode::UncoveredVariables, "unknown block variable '" + name + "'");
            if (block_of[idx] != static_cast<std::size_t>(-1))
                fail(ErrorCode::OverlappingBlocks,
                     "variable '" + name + "' appears in more than one block");
            block_of[idx] = b;
        }
    }
    for (std::size_t j = 0; j < n1; ++j)
        if (block_of[j] == static_cast<std::size_t>(-1))
            fail(ErrorCode::UncoveredVariables,
                 "variable '" + ring->vars[j] + "' is not covered by the blocks");
    return block_of;
}

inline PolyMatrix build_gamma(const RingPtr& ring, const GammaSpec& spec) {
    switch (spec.kind) {
        case GammaSpec::Kind::Euler:
            return euler_column(ring);
        case GammaSpec::Kind::BlockEuler: {
            auto block_of = validate_partition(ring, spec.partition);
            const std::size_t n1 = ring->nvars();
            PolyMatrix g(ring, n1, spec.partition.size());
            for (std::size_t j = 0; j < n1; ++j)
                g.set(j, block_of[j], Poly::variable(ring, j));
            g.with_degrees(std::vector<Degree>(n1, 0),
                           std::vector<Degree>(spec.partition.size(), 1));
            return g;
        }
        case GammaSpec::Kind::Explicit:
            if (!spec.matrix) fail(ErrorCode::InvalidProblem, "missing explicit gamma matrix");
            return detail::with_standard_grading(*spec.matrix);
    }
    fail(ErrorCode::InvalidProblem, "bad gamma spec");
}

/// Classical divisor criterion on P^n: theta = (Euler | nu) is square,
/// det(theta) = h * f, and a nonzero constant h certifies freeness with
/// summand twists given by nu's column degrees.
inline FreenessCertificate check_divisor_free(const Poly& f, const PolyMatrix& nu_in,
                                              const CheckOptions& opts = {}) {
    const RingPtr& R = f.ring();
    require_same_ring(R, nu_in.ring());
    auto hf = homogeneity(f);
    if (f.is_zero() || !hf.is_homogeneous || hf.degree < 1)
        fail(ErrorCode::NonHomogeneousInput, "f must be nonzero homogeneous of degree >= 1");
    const std::uint64_t p = R->field.characteristic();
    if (p != 0 && static_cast<std::uint64_t>(hf.degree) % p == 0)
        fail(ErrorCode::CharDividesDegree,
             "char " + std::to_string(p) + " divides deg(f) = " + std::to_string(hf.degree));
    const std::size_t n1 = R->nvars();
    if (nu_in.rows() != n1 || nu_in.cols() != n1 - 1)
        fail(ErrorCode::DimensionMismatch,
             "nu must be (n+1) x n = " + std::to_string(n1) + " x " + std::to_string(n1 - 1));

    PolyMatrix alpha = jacobian({f});
    detail::require_syzygy_columns(alpha, nu_in);
    PolyMatrix nu = detail::with_standard_grading(nu_in);
    PolyMatrix theta = hconcat(euler_column(R), nu);

    FreenessCertificate cert(R);
    cert.command = "check-divisor";
    cert.gamma_kind = "euler";
    cert.g_theta = determinant(theta, opts.method);
    cert.g_alpha = gcd_multivariate(maximal_minors(alpha, std::nullopt, opts.method));
    cert.g_alphagamma = f;
    cert.h = exact_divide(cert.g_theta * cert.g_alpha, f);
    cert.verdict = (!cert.h.is_zero() && cert.h.total_degree() == 0) ? Verdict::Free
                                                                     : Verdict::NotCertified;
    cert.splitting_degrees = *nu.col_degrees();
    for (Degree e : cert.splitting_degrees) cert.chern_sum_splitting += e;
    cert.chern_sum_twists = hf.degree - 1 - cert.g_alpha.total_degree();
    cert.sigma_echo = {to_string(f)};
    cert.nu_echo = detail::echo_matrix(nu);
    cert.gamma_echo = detail::echo_matrix(euler_column(R));
    cert.theta_echo = detail::echo_matrix(theta);
    cert.alpha_echo = detail::echo_matrix(alpha);
    cert.alphagamma_echo = {{to_string(f)}};
    cert.notes.push_back("g_theta is det(Euler|nu); g_alphagamma echoes f as given, so "
                         "g_theta*g_alpha = h*g_alphagamma reads det(theta) = h*f for "
                         "square-free f");
    cert.notes.push_back("square-freeness of f is the caller's responsibility");
    return cert;
}

/// Generalized criterion for sequences. theta = (nu | gamma); the identity
/// gcd(minors(theta)) * gcd(minors(alpha)) = h * gcd(minors(alpha*gamma))
/// is evaluated exactly and h decides the verdict.
inline FreenessCertificate check_sequence(const SequenceSpec& sigma, const PolyMatrix& nu_in,
                                          const GammaSpec& gamma_spec,
                                          const CheckOptions& opts = {}) {
    const RingPtr& R = sigma.ring();
    require_same_ring(R, nu_in.ring());
    const std::size_t n1 = R->nvars(), k = sigma.k();

    if (!opts.assume_independent) {
        auto ind = algebraic_independence(sigma.polys());
        if (!ind.independent)
            fail(ErrorCode::IndependenceFailed,
                 "sequence is algebraically dependent; relation: " +
                     (ind.witness ? to_string(*ind.witness) : std::string("?")));
    }

    PolyMatrix alpha = jacobian(sigma);
    if (generic_rank(alpha, opts.method) != k)
        fail(ErrorCode::JacobianRankDeficient, "jacobian does not have maximal rank k");

    if (nu_in.rows() != n1 || nu_in.cols() != n1 - k)
        fail(ErrorCode::DimensionMismatch,
             "nu must be (n+1) x (n+1-k) = " + std::to_string(n1) + " x " +
                 std::to_string(n1 - k));
    detail::require_syzygy_columns(alpha, nu_in);
    PolyMatrix nu = detail::with_standard_grading(nu_in);
    if (generic_rank(nu, opts.method) != nu.cols())
        fail(ErrorCode::NuRankDeficient, "nu does not have full column rank");

    PolyMatrix gamma = build_gamma(R, gamma_spec);
    if (gamma.rows() != n1)
        fail(ErrorCode::DimensionMismatch, "gamma must have n+1 rows");
    PolyMatrix alphagamma = mat_mul(alpha, gamma);
    if (generic_rank(alphagamma, opts.method) != gamma.cols())
        fail(ErrorCode::GammaNotMono, "alpha o gamma is not injective");

    PolyMatrix theta = hconcat(nu, gamma);

    FreenessCertificate cert(R);
    cert.command = "check-sequence";
    cert.gamma_kind = gamma_spec.kind_name();
    cert.g_theta = gcd_multivariate(maximal_minors(theta, std::nullopt, opts.method));
    cert.g_alpha = gcd_multivariate(maximal_minors(alpha, std::nullopt, opts.method));
    cert.g_alphagamma = gcd_multivariate(maximal_minors(alphagamma, std::nullopt, opts.method));
    cert.h = exact_divide(cert.g_theta * cert.g_alpha, cert.g_alphagamma);
    cert.verdict = (!cert.h.is_zero() && cert.h.total_degree() == 0) ? Verdict::Free
                                                                     : Verdict::NotCertified;
    cert.splitting_degrees = *nu.col_degrees();
    for (Degree e : cert.splitting_degrees) cert.chern_sum_splitting += e;
    cert.chern_sum_twists = sigma.twist_sum() - cert.g_alpha.total_degree();
    for (const Poly& f : sigma.polys()) cert.sigma_echo.push_back(to_string(f));
    cert.nu_echo = detail::echo_matrix(nu);
    cert.gamma_echo = detail::echo_matrix(gamma);
    cert.theta_echo = detail::echo_matrix(theta);
    cert.alpha_echo = detail::echo_matrix(alpha);
    cert.alphagamma_echo = detail::echo_matrix(alphagamma);
    cert.notes.push_back("the three gcds are monic under the active order");
    if (opts.assume_independent)
        cert.notes.push_back("algebraic independence was assumed, not verified");
    return cert;
}

/// Splitting certificate in positive characteristic: the kernel sheaf of
/// the Jacobian splits as O(-1) + O(-d). d comes from first Chern class
/// bookkeeping; the certificate stands only when an explicit syzygy pair
/// of degrees {1, d} with constant minor gcd confirms it.
struct SplitCertificate {
    bool certified = false;
    std::uint64_t char_p = 0;
    Degree d = 0;              // implementation bookkeeping value
    Degree gcd_degree = 0;     // deg gcd(minors(jacobian))
    Degree alt_formula_d = 0;
    bool formula_agrees = false;
    std::vector<Degree> oracle_degrees;          // pair degrees, ascending
    std::vector<Degree> syzygy_generator_degrees; // all basis degrees
    std::vector<std::vector<std::string>> pair_echo; // two certifying columns
    RingPtr ring;
    std::vector<std::string> sigma_echo;
    std::vector<std::string> notes;
};

inline SplitCertificate positive_char_split(const SequenceSpec& sigma,
                                            const CheckOptions& opts = {}) {
    const RingPtr& R = sigma.ring();
    const std::uint64_t p = R->field.characteristic();
    if (p == 0) fail(ErrorCode::CharZero, "positive characteristic required");
    const std::size_t n = sigma.n();
    if (sigma.k() != n - 1)
        fail(ErrorCode::LengthMismatch,
             "need exactly n-1 = " + std::to_string(n - 1) + " polynomials, got " +
                 std::to_string(sigma.k()));
    for (std::size_t i = 0; i < sigma.k(); ++i)
        if (static_cast<std::uint64_t>(sigma.degrees()[i]) % p != 0)
            fail(ErrorCode::DegreeNotDivisible,
                 "char " + std::to_string(p) + " does not divide deg(f_" + std::to_string(i + 1) +
                     ") = " + std::to_string(sigma.degrees()[i]));

    PolyMatrix alpha = jacobian(sigma);
    if (generic_rank(alpha, opts.method) != n - 1)
        fail(ErrorCode::JacobianRankDeficient, "jacobian rank is below n-1");
    if (!mat_mul(alpha, euler_column(R)).is_zero())
        fail(ErrorCode::InternalError, "Euler column is not a syzygy despite char | degrees");

    SplitCertificate cert;
    cert.char_p = p;
    cert.ring = R;
    for (const Poly& f : sigma.polys()) cert.sigma_echo.push_back(to_string(f));

    auto dv = divisor_of_map(alpha, opts.method);
    cert.gcd_degree = dv.degree;
    const Degree degsum = sigma.degree_sum();
    cert.d = degsum - static_cast<Degree>(n - 1) - cert.gcd_degree - 1;
    cert.alt_formula_d = degsum - static_cast<Degree>(n - 1) - cert.gcd_degree + 1;
    cert.formula_agrees = cert.alt_formula_d == cert.d;

    const Degree bound = opts.degree_bound.value_or(1 + degsum);
    auto syz = syzygy_basis(alpha, bound);
    cert.syzygy_generator_degrees = syz.degrees;

    const Degree lo = std::min<Degree>(1, cert.d), hi = std::max<Degree>(1, cert.d);
    for (std::size_t i = 0; i < syz.columns.size() && !cert.certified; ++i) {
        for (std::size_t j = i + 1; j < syz.columns.size() && !cert.certified; ++j) {
            const Degree di = syz.degrees[i], dj = syz.degrees[j];
            if (std::min(di, dj) != lo || std::max(di, dj) != hi) continue;
            PolyMatrix pair(R, R->nvars(), 2);
            for (std::size_t r = 0; r < R->nvars(); ++r) {
                pair.set(r, 0, syz.columns[i][r]);
                pair.set(r, 1, syz.columns[j][r]);
            }
            if (generic_rank(pair, opts.method) != 2) continue;
            Poly g = gcd_multivariate(maximal_minors(pair, 2, opts.method));
            if (g.is_zero() || g.total_degree() != 0) continue;
            cert.certified = true;
            cert.oracle_degrees = {lo, hi};
            cert.pair_echo = detail::echo_matrix(pair);
        }
    }

    cert.notes.push_back(
        "d is computed as sum(deg f_i) - (n-1) - deg(gcd(minors(jacobian))) - 1; the "
        "alternative '+1' variant is reported as alt_formula_d and never adopted");
    if (!cert.certified)
        cert.notes.push_back("no syzygy pair of degrees {1, d} with constant minor gcd "
                             "was exhibited at bound " + std::to_string(bound));
    return cert;
}

/// Assembled block data: disjoint two-variable blocks, one square-free
/// polynomial each, with the block-diagonal syzygy matrix and one Euler
/// column per block.
struct BlockSpec {
    std::vector<std::string> vars;
    std::vector<Poly> polys;
};

struct BlockSequence {
    SequenceSpec sigma;
    PolyMatrix nu;
    PolyMatrix gamma;
    std::vector<std::vector<std::string>> partition;
};

inline BlockSequence block_sequence(const RingPtr& ring, const std::vector<BlockSpec>& blocks) {
    if (blocks.empty()) fail(ErrorCode::InvalidProblem, "no blocks");
    std::vector<std::vector<std::string>> partition;
    for (const BlockSpec& b : blocks) partition.push_back(b.vars);
    auto block_of = validate_partition(ring, partition);

    const std::size_t n1 = ring->nvars();
    std::vector<Poly> polys;
    PolyMatrix nu(ring, n1, blocks.size());
    std::vector<Degree> nu_col_deg;

    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const BlockSpec& blk = blocks[b];
        if (blk.vars.size() != 2 || blk.polys.size() != 1)
            fail(ErrorCode::BlockShapeUnsupported,
                 "each block needs exactly two variables and one polynomial");
        const Poly& f = blk.polys[0];
        require_same_ring(ring, f.ring());
        auto h = homogeneity(f);
        if (f.is_zero() || !h.is_homogeneous || h.degree < 1)
            fail(ErrorCode::NonHomogeneousInput, "block polynomial must be nonzero homogeneous");
        std::size_t v0 = n1, v1 = n1;
        for (std::size_t j = 0; j < n1; ++j) {
            if (ring->vars[j] == blk.vars[0]) v0 = j;
            if (ring->vars[j] == blk.vars[1]) v1 = j;
        }
        for (const auto& [mono, c] : f.terms())
            for (std::size_t j = 0; j < n1; ++j)
                if (mono.exp(j) > 0 && block_of[j] != b)
                    fail(ErrorCode::InvalidProblem,
                         "block polynomial uses variable '" + ring->vars[j] +
                             "' outside its block");
        polys.push_back(f);
        nu.set(v0, b, partial_derivative(f, v1));
        nu.set(v1, b, -partial_derivative(f, v0));
        nu_col_deg.push_back(h.degree - 1);
    }
    nu.with_degrees(std::vector<Degree>(n1, 0), std::move(nu_col_deg));

    PolyMatrix gamma = build_gamma(ring, GammaSpec::block_euler(partition));
    return {SequenceSpec(std::move(polys)), std::move(nu), std::move(gamma), partition};
}

/// Enumerates candidate nu matrices assembled from syzygy basis columns:
/// n+1-k columns whose degrees sum to sum(d_i) - deg(gcd(minors(alpha))),
/// filtered to full column rank, ordered by degree vector then index.
inline std::vector<PolyMatrix> find_candidate_nu(const SequenceSpec& sigma,
                                                 std::optional<Degree> degree_bound = std::nullopt,
                                                 const CheckOptions& opts = {}) {
    const RingPtr& R = sigma.ring();
    if (!opts.assume_independent) {
        auto ind = algebraic_independence(sigma.polys());
        if (!ind.independent)
            fail(ErrorCode::IndependenceFailed, "sequence is algebraically dependent");
    }
    PolyMatrix alpha = jacobian(sigma);
    Poly g_alpha = gcd_multivariate(maximal_minors(alpha, std::nullopt, opts.method));
    const Degree target = sigma.twist_sum() - g_alpha.total_degree();
    const Degree bound = degree_bound.value_or(opts.degree_bound.value_or(1 + sigma.degree_sum()));
    auto syz = syzygy_basis(alpha, bound);

    const std::size_t c = sigma.n() + 1 - sigma.k();
    const std::size_t m = syz.columns.size();
    std::vector<PolyMatrix> out;
    if (m < c) return out;

    struct Candidate {
        std::vector<Degree> degs;
        std::vector<std::size_t> idx;
    };
    std::vector<Candidate> cands;
    std::vector<std::size_t> sel(c);
    for (std::size_t i = 0; i < c; ++i) sel[i] = i;
    while (true) {
        Degree s = 0;
        for (std::size_t i : sel) s += syz.degrees[i];
        if (s == target) {
            std::vector<Degree> dv;
            for (std::size_t i : sel) dv.push_back(syz.degrees[i]);
            cands.push_back({dv, sel});
        }
        std::size_t i = c;
        while (i > 0 && sel[i - 1] == m - c + i - 1) --i;
        if (i == 0) break;
        ++sel[i - 1];
        for (std::size_t j = i; j < c; ++j) sel[j] = sel[j - 1] + 1;
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.degs != b.degs) return a.degs < b.degs;
        return a.idx < b.idx;
    });
    for (const Candidate& cand : cands) {
        PolyMatrix nu(R, R->nvars(), c);
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < R->nvars(); ++i)
                nu.set(i, j, syz.columns[cand.idx[j]][i]);
        if (generic_rank(nu, opts.method) != c) continue;
        nu.with_degrees(std::vector<Degree>(R->nvars(), 0), std::vector<Degree>(cand.degs));
        out.push_back(std::move(nu));
    }
    return out;
}

} // namespace logfree
