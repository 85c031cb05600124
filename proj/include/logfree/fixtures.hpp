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
#include <string>
#include <vector>

#include "logfree/json_io.hpp"

namespace logfree {

/**
 * Built-in regression corpus. Every fixture runs a complete check and
 * verifies frozen expected values, so `logfree fixtures` doubles as the
 * release smoke test. Order is fixed; certificates are emitted in it.
 */

struct FixtureOutcome {
    std::string name;
    bool pass = false;
    std::string detail; // first failed expectation, empty when passing
    json certificate;
};

namespace fixtures_detail {

struct Check {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

inline PolyMatrix matrix_of(const RingPtr& R, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Poly>> ps;
    for (const auto& row : rows) {
        std::vector<Poly> pr;
        for (const auto& s : row) pr.push_back(parse_poly(s, R));
        ps.push_back(std::move(pr));
    }
    return PolyMatrix::from_rows(R, ps);
}

inline std::vector<std::string> xvars(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

// Tangent developable quartic of the rational normal cubic in P^3 with its
// three linear syzygies.
inline FixtureOutcome quartic_divisor() {
    FixtureOutcome out;
    out.name = "quartic-tangent-developable";
    auto R = make_ring(FieldSpec::rationals(), xvars(4));
    Poly sigma =
        parse_poly("3*x0^2*x1^2 - 4*x0^3*x2 - 4*x1^3*x3 + 6*x0*x1*x2*x3 - x2^2*x3^2", R);
    PolyMatrix nu = matrix_of(R, {{"x3", "x0", "2*x1"},
                                  {"2*x0", "-x1", "x2"},
                                  {"3*x1", "-3*x2", "0"},
                                  {"0", "3*x3", "3*x0"}});
    auto cert = check_divisor_free(sigma, nu);
    Check c;
    c.expect(cert.verdict == Verdict::Free, "verdict is not Free");
    c.expect(cert.h == Poly::constant(R, 6), "h != 6");
    c.expect(cert.splitting_degrees == std::vector<Degree>({1, 1, 1}), "splitting != (1,1,1)");
    c.expect(determinant(hconcat(euler_column(R), nu)) == Poly::constant(R, 6) * sigma,
             "det(Euler|nu) != 6*sigma");
    out.pass = c.pass;
    out.detail = c.detail;
    out.certificate = certificate_to_json(cert);
    return out;
}

// Quadric-cubic complete intersection in P^4 with the 5x3 syzygy matrix.
inline FixtureOutcome pair_sequence() {
    FixtureOutcome out;
    out.name = "quadric-cubic-pair";
    auto R = make_ring(FieldSpec::rationals(), xvars(5));
    Poly f = parse_poly("x2^2 - 2*x1*x3 + 2*x0*x4", R);
    Poly g = parse_poly("2*x2^3 - 6*x1*x2*x3 + 9*x0*x3^2 + 6*x1^2*x4 - 12*x0*x2*x4", R);
    PolyMatrix nu = matrix_of(R, {{"2*x1", "2*x0", "0"},
                                  {"3*x2", "x1", "x0"},
                                  {"3*x3", "0", "x1"},
                                  {"2*x4", "-x3", "x2"},
                                  {"0", "-2*x4", "x3"}});
    SequenceSpec sigma({f, g});
    auto cert = check_sequence(sigma, nu, GammaSpec::euler());
    Check c;
    c.expect(cert.verdict == Verdict::Free, "verdict is not Free");
    c.expect(cert.splitting_degrees == std::vector<Degree>({1, 1, 1}), "splitting != (1,1,1)");
    PolyMatrix alpha = jacobian(sigma);
    for (std::size_t j = 0; j < 3; ++j) {
        std::vector<Poly> col;
        for (std::size_t i = 0; i < 5; ++i) col.push_back(nu.at(i, j));
        c.expect(annihilates(alpha, col), "nu column is not a syzygy");
    }
    out.pass = c.pass;
    out.detail = c.detail;
    out.certificate = certificate_to_json(cert);
    return out;
}

// Two binary quadrics on disjoint variable pairs in P^3.
inline FixtureOutcome two_blocks() {
    FixtureOutcome out;
    out.name = "two-disjoint-quadrics";
    auto R = make_ring(FieldSpec::rationals(), {"x00", "x01", "x10", "x11"});
    auto bs = block_sequence(R, {{{"x00", "x01"}, {parse_poly("x00*x01", R)}},
                                 {{"x10", "x11"}, {parse_poly("x10*x11", R)}}});
    auto cert = check_sequence(bs.sigma, bs.nu, GammaSpec::block_euler(bs.partition));
    Check c;
    c.expect(cert.verdict == Verdict::Free, "verdict is not Free");
    c.expect(cert.splitting_degrees == std::vector<Degree>({1, 1}), "splitting != (1,1)");
    // determinant of the block-diagonal column arrangement
    PolyMatrix arranged(R, 4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        arranged.set(i, 0, bs.nu.at(i, 0));
        arranged.set(i, 1, bs.gamma.at(i, 0));
        arranged.set(i, 2, bs.nu.at(i, 1));
        arranged.set(i, 3, bs.gamma.at(i, 1));
    }
    Poly want =
        Poly::constant(R, 4) * parse_poly("x00*x01", R) * parse_poly("x10*x11", R);
    c.expect(determinant(arranged) == want, "arranged det != 4*f0*f1");
    out.pass = c.pass;
    out.detail = c.detail;
    out.certificate = certificate_to_json(cert);
    return out;
}

// The rank-one composite where the divisor inequality fails but the
// divisors of theta and alpha o theta still agree.
inline FixtureOutcome torsion_counterexample() {
    FixtureOutcome out;
    out.name = "torsion-counterexample";
    auto R = make_ring(FieldSpec::rationals(), xvars(3));
    PolyMatrix alpha = matrix_of(R, {{"x1", "x0", "0"}, {"x2", "0", "x0"}});
    PolyMatrix theta = matrix_of(R, {{"x0", "x0"}, {"-x1", "x1"}, {"-x2", "x2"}});
    PolyMatrix comp = mat_mul(alpha, theta);

    auto dv_alpha = divisor_of_map(alpha);
    auto dv_theta = divisor_of_map(theta);
    auto dv_comp = divisor_of_map(comp);

    Check c;
    Poly x0 = parse_poly("x0", R);
    c.expect(dv_alpha.equation == x0 && dv_alpha.degree == 1, "dv(alpha) != x0");
    c.expect(dv_theta.equation == x0 && dv_theta.degree == 1, "dv(theta) != x0");
    c.expect(dv_comp.equation == x0 && dv_comp.degree == 1, "dv(alpha o theta) != x0");
    c.expect(generic_rank(comp) == 1, "alpha o theta should have rank 1");

    json j;
    j["schema"] = "logfree-divisor/1";
    j["command"] = "fixtures/torsion-counterexample";
    j["dv_alpha"] = divisor_to_json(dv_alpha, alpha, generic_rank(alpha));
    j["dv_theta"] = divisor_to_json(dv_theta, theta, generic_rank(theta));
    j["dv_alpha_theta"] = divisor_to_json(dv_comp, comp, generic_rank(comp));
    j["notes"] = json::array(
        {"dv(theta) = dv(alpha o theta) although dv(theta) + dv(alpha) exceeds "
         "dv(alpha o theta); the sufficient inequality is not necessary"});
    out.pass = c.pass;
    out.detail = c.detail;
    out.certificate = j;
    return out;
}

inline FixtureOutcome poschar_f3() {
    FixtureOutcome out;
    out.name = "poschar-f3-monomial";
    auto R = make_ring(FieldSpec::prime_field(3), xvars(3));
    auto cert = positive_char_split(SequenceSpec({parse_poly("x0*x1*x2", R)}));
    Check c;
    c.expect(cert.certified, "splitting not certified");
    c.expect(cert.d == 1, "d != 1");
    c.expect(cert.gcd_degree == 0, "gcd degree != 0");
    c.expect(cert.oracle_degrees == std::vector<Degree>({1, 1}), "oracle degrees != {1,1}");
    c.expect(!cert.formula_agrees, "formula_agrees should be false");
    c.expect(cert.alt_formula_d == 3, "alternative formula should print 3");
    out.pass = c.pass;
    out.detail = c.detail;
    out.certificate = split_certificate_to_json(cert);
    return out;
}

inline FixtureOutcome poschar_f2() {
    FixtureOutcome out;
    out.name = "poschar-f2-quadric";
    auto R = make_ring(FieldSpec::prime_field(2), xvars(3));
    auto cert = positive_char_split(SequenceSpec({parse_poly("x0^2 + x1*x2", R)}));
    Check c;
    c.expect(cert.certified, "splitting not certified");
    c.expect(cert.d == 0, "d != 0");
    c.expect(cert.oracle_degrees == std::vector<Degree>({0, 1}), "oracle degrees != {0,1}");
    c.expect(!cert.formula_agrees, "formula_agrees should be false");
    c.expect(cert.alt_formula_d == 2, "alternative formula should print 2");
    out.pass = c.pass;
    out.detail = c.detail;
    out.certificate = split_certificate_to_json(cert);
    return out;
}

// Degenerate smoke case: a single coordinate in P^1.
inline FixtureOutcome smoke_p1() {
    FixtureOutcome out;
    out.name = "smoke-p1-coordinate";
    auto R = make_ring(FieldSpec::rationals(), xvars(2));
    auto cert = check_sequence(SequenceSpec({parse_poly("x0", R)}),
                               matrix_of(R, {{"0"}, {"1"}}), GammaSpec::euler());
    Check c;
    c.expect(cert.verdict == Verdict::Free, "verdict is not Free");
    c.expect(cert.h == Poly::constant(R, 1), "h != 1");
    c.expect(cert.splitting_degrees == std::vector<Degree>({0}), "splitting != (0)");
    out.pass = c.pass;
    out.detail = c.detail;
    out.certificate = certificate_to_json(cert);
    return out;
}

// Fermat cubic with its Koszul syzygies: the criterion must not certify.
inline FixtureOutcome fermat_cubic() {
    FixtureOutcome out;
    out.name = "fermat-cubic-koszul";
    auto R = make_ring(FieldSpec::rationals(), xvars(3));
    Poly f = parse_poly("x0^3 + x1^3 + x2^3", R);
    PolyMatrix nu = matrix_of(R, {{"x1^2", "x2^2"}, {"-x0^2", "0"}, {"0", "-x0^2"}});
    auto cert = check_divisor_free(f, nu);
    Check c;
    c.expect(cert.verdict == Verdict::NotCertified, "verdict should be NotCertified");
    c.expect(cert.h == parse_poly("x0^2", R), "h != x0^2");
    out.pass = c.pass;
    out.detail = c.detail;
    out.certificate = certificate_to_json(cert);
    return out;
}

} // namespace fixtures_detail

inline std::vector<FixtureOutcome> run_fixtures() {
    using namespace fixtures_detail;
    std::vector<FixtureOutcome> out;
    out.push_back(quartic_divisor());
    out.push_back(pair_sequence());
    out.push_back(two_blocks());
    out.push_back(torsion_counterexample());
    out.push_back(poschar_f3());
    out.push_back(poschar_f2());
    out.push_back(smoke_p1());
    out.push_back(fermat_cubic());
    return out;
}

inline json fixtures_to_json(const std::vector<FixtureOutcome>& outcomes) {
    json arr = json::array();
    for (const auto& o : outcomes) {
        json e;
        e["name"] = o.name;
        e["pass"] = o.pass;
        if (!o.detail.empty()) e["detail"] = o.detail;
        e["certificate"] = o.certificate;
        arr.push_back(e);
    }
    return json{{"schema", "logfree-fixtures/1"}, {"fixtures", arr}};
}

} // namespace logfree
