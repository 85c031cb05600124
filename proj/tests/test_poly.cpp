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

#include <catch2/catch_amalgamated.hpp>

#include "logfree/parser.hpp"
#include "logfree/poly.hpp"
#include "test_support.hpp"

using namespace logfree;
using logfree::testing::RandomPolys;
using logfree::testing::var_names;

namespace {

RingPtr ring_q(std::size_t n) {
    return make_ring(FieldSpec::rationals(), var_names(n));
}

RingPtr ring_p(std::size_t n, std::uint64_t p) {
    return make_ring(FieldSpec::prime_field(p), var_names(n));
}

} // namespace

TEST_CASE("parsing the tangent developable quartic string") {
    auto R = ring_q(4);
    const std::string s = "x0^2*x1^2 - 4*x0^3*x2 - 4*x1^3*x3 + 6*x0*x1*x2*x3 - x2^2*x3^2";
    Poly f = parse_poly(s, R);
    CHECK(f.terms().size() == 5);
    auto h = homogeneity(f);
    CHECK(h.is_homogeneous);
    CHECK(h.degree == 4);
    // round trip is the identity on canonical forms
    CHECK(to_string(f) == s);
    CHECK(parse_poly(to_string(f), R) == f);
}

TEST_CASE("parsing zero and constants") {
    auto R = ring_q(2);
    CHECK(parse_poly("0", R).is_zero());
    CHECK(to_string(parse_poly("0", R)) == "0");
    CHECK(to_string(parse_poly("3/2", R)) == "3/2");
    CHECK(to_string(parse_poly("-(x0 - x1)", R)) == "-x0 + x1");
    CHECK(to_string(parse_poly("2*x0^1", R)) == "2*x0");
}

TEST_CASE("parsing reduces coefficients mod p") {
    auto R = ring_p(5, 2);
    Poly f = parse_poly("x2^2 - 2*x1*x3 + 2*x0*x4", R);
    CHECK(to_string(f) == "x2^2");
}

TEST_CASE("parse errors carry positions") {
    auto R = ring_q(2);
    try {
        parse_poly("x0 + @", R);
        FAIL("expected SyntaxError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SyntaxError);
        REQUIRE(e.position().has_value());
        CHECK(*e.position() == 5);
    }
    try {
        parse_poly("x0 * x9", R);
        FAIL("expected UnknownVariable");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownVariable);
    }
    try {
        parse_poly("x0^x1", R);
        FAIL("expected NonIntegerExponent");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonIntegerExponent);
    }
    // juxtaposition is not multiplication
    CHECK_THROWS_AS(parse_poly("2 x0", R), Error);
    // '/' is only a rational literal separator
    CHECK_THROWS_AS(parse_poly("x0/2", R), Error);
}

TEST_CASE("ring arithmetic basics") {
    auto R = ring_q(2);
    Poly a = parse_poly("x0 + x1", R);
    Poly b = parse_poly("x0 - x1", R);
    CHECK(a * b == parse_poly("x0^2 - x1^2", R));

    auto R2 = ring_p(2, 2);
    Poly c = parse_poly("x0 + x1", R2);
    CHECK(c * c == parse_poly("x0^2 + x1^2", R2));
}

TEST_CASE("mixing rings is rejected") {
    Poly a = parse_poly("x0", ring_q(2));
    Poly b = parse_poly("x0", ring_p(2, 3));
    CHECK_THROWS_AS(a + b, Error);
    Poly c = parse_poly("x0", make_ring(FieldSpec::rationals(), {"x0", "y"}));
    CHECK_THROWS_AS(a + c, Error);
}

TEST_CASE("exact division") {
    auto R = ring_q(2);
    CHECK(exact_divide(parse_poly("x0^2 - x1^2", R), parse_poly("x0 - x1", R)) ==
          parse_poly("x0 + x1", R));

    auto R4 = ring_q(4);
    Poly sigma = parse_poly(
        "3*x0^2*x1^2 - 4*x0^3*x2 - 4*x1^3*x3 + 6*x0*x1*x2*x3 - x2^2*x3^2", R4);
    Poly six_sigma = Poly::constant(R4, 6) * sigma;
    CHECK(exact_divide(six_sigma, sigma) == Poly::constant(R4, 6));

    try {
        exact_divide(parse_poly("x0^2 + x1", R), parse_poly("x0", R));
        FAIL("expected NotDivisible");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotDivisible);
        CHECK(e.witness() == "x1");
    }
    CHECK_THROWS_AS(exact_divide(parse_poly("x0", R), Poly::zero(R)), Error);
}

TEST_CASE("partial derivatives") {
    auto R = ring_q(2);
    CHECK(partial_derivative(parse_poly("x0^2*x1", R), 0) == parse_poly("2*x0*x1", R));

    auto R2 = ring_p(1, 2);
    CHECK(partial_derivative(parse_poly("x0^2", R2), 0).is_zero());

    auto R5 = ring_q(5);
    Poly f = parse_poly("x2^2 - 2*x1*x3 + 2*x0*x4", R5);
    const char* expected[] = {"2*x4", "-2*x3", "2*x2", "-2*x1", "2*x0"};
    for (std::size_t j = 0; j < 5; ++j)
        CHECK(partial_derivative(f, j) == parse_poly(expected[j], R5));

    CHECK_THROWS_AS(partial_derivative(f, 5), Error);
}

TEST_CASE("euler derivation") {
    auto R = ring_q(2);
    Poly f = parse_poly("x0^2*x1", R);
    CHECK(euler_apply(f) == Poly::constant(R, 3) * f);

    auto R3 = ring_p(3, 3);
    CHECK(euler_apply(parse_poly("x0*x1*x2", R3)).is_zero());

    auto R4 = ring_q(4);
    Poly sigma = parse_poly(
        "3*x0^2*x1^2 - 4*x0^3*x2 - 4*x1^3*x3 + 6*x0*x1*x2*x3 - x2^2*x3^2", R4);
    CHECK(euler_apply(sigma) == Poly::constant(R4, 4) * sigma);
}

TEST_CASE("homogeneity") {
    auto R = ring_q(3);
    auto h1 = homogeneity(parse_poly("x0^2 + x1*x2", R));
    CHECK(h1.is_homogeneous);
    CHECK(h1.degree == 2);
    CHECK_FALSE(homogeneity(parse_poly("x0 + x1^2", R)).is_homogeneous);
    auto h0 = homogeneity(Poly::zero(R));
    CHECK(h0.is_homogeneous);
    CHECK(h0.degree == kNegInfinity);
    CHECK(Poly::zero(R).total_degree() == kNegInfinity);
}

TEST_CASE("ring axioms on random samples") {
    RandomPolys rnd(0xabcdef12);
    for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime_field(2),
                              FieldSpec::prime_field(3), FieldSpec::prime_field(5)}) {
        auto R = make_ring(field, var_names(3));
        for (int i = 0; i < 200; ++i) {
            Poly a = rnd.poly(R, 3, 4), b = rnd.poly(R, 3, 4), c = rnd.poly(R, 3, 4);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a + (-a)).is_zero());
        }
    }
}

TEST_CASE("multiplication of homogeneous inputs adds degrees") {
    RandomPolys rnd(777);
    auto R = ring_q(3);
    for (int i = 0; i < 50; ++i) {
        Poly a = rnd.homogeneous_poly(R, 2, 3);
        Poly b = rnd.homogeneous_poly(R, 3, 3);
        Poly p = a * b;
        auto h = homogeneity(p);
        CHECK(h.is_homogeneous);
        if (!p.is_zero()) CHECK(h.degree == 5);
    }
}

TEST_CASE("Leibniz rule on random pairs") {
    RandomPolys rnd(424242);
    for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime_field(3)}) {
        auto R = make_ring(field, var_names(3));
        for (int i = 0; i < 100; ++i) {
            Poly f = rnd.poly(R, 3, 4), g = rnd.poly(R, 3, 4);
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK(partial_derivative(f * g, j) ==
                      f * partial_derivative(g, j) + g * partial_derivative(f, j));
            }
        }
    }
}

TEST_CASE("Euler identity on random homogeneous polynomials") {
    RandomPolys rnd(99991);
    for (std::uint64_t ch : {std::uint64_t{0}, std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{5}}) {
        auto field = ch == 0 ? FieldSpec::rationals() : FieldSpec::prime_field(ch);
        auto R = make_ring(field, var_names(3));
        for (int i = 0; i < 100; ++i) {
            auto d = static_cast<std::uint32_t>(rnd.pick_int(1, 6));
            Poly f = rnd.homogeneous_poly(R, d, 4);
            long dm = ch == 0 ? static_cast<long>(d) : static_cast<long>(d % ch);
            CHECK(euler_apply(f) == Poly::constant(R, dm) * f);
        }
    }
}

TEST_CASE("print/parse round trip on random polynomials") {
    RandomPolys rnd(31337);
    for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        auto R = make_ring(field, var_names(4));
        for (int i = 0; i < 200; ++i) {
            Poly f = rnd.poly(R, 4, 6);
            CHECK(parse_poly(to_string(f), R) == f);
        }
    }
    // rationals with denominators
    auto R = ring_q(2);
    Poly f = parse_poly("3/2*x0^2 - 1/7*x0*x1 + 5", R);
    CHECK(parse_poly(to_string(f), R) == f);
}

TEST_CASE("monomial orders are total and compatible with multiplication") {
    RandomPolys rnd(0x0dde5);
    for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::graded_lex()}) {
        for (int t = 0; t < 200; ++t) {
            Monomial a = rnd.monomial(3, 4), b = rnd.monomial(3, 4), c = rnd.monomial(3, 4);
            int ab = mono_compare(a, b, ord);
            CHECK(mono_compare(b, a, ord) == -ab);
            CHECK((ab == 0) == (a == b));
            // multiplying both sides by c preserves the comparison
            CHECK(mono_compare(a * c, b * c, ord) == ab);
            // graded orders refine total degree
            if (ord.kind != OrderKind::Lex && a.degree() > b.degree())
                CHECK(mono_compare(a, b, ord) > 0);
        }
    }
}

TEST_CASE("canonical form under the three monomial orders") {
    for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::graded_lex()}) {
        auto R = make_ring(FieldSpec::rationals(), var_names(3), ord);
        Poly f = parse_poly("x2^3 + x0*x1 + x0 + 1", R);
        // strictly descending terms
        for (std::size_t i = 0; i + 1 < f.terms().size(); ++i)
            CHECK(mono_compare(f.terms()[i].first, f.terms()[i + 1].first, ord) > 0);
        CHECK(parse_poly(to_string(f), R) == f);
    }
    // lex and gradedlex disagree on x0 vs x1^2
    auto Rlex = make_ring(FieldSpec::rationals(), var_names(2), MonomialOrder::lex());
    CHECK(to_string(parse_poly("x1^2 + x0", Rlex)) == "x0 + x1^2");
    auto Rdeg = make_ring(FieldSpec::rationals(), var_names(2), MonomialOrder::graded_lex());
    CHECK(to_string(parse_poly("x1^2 + x0", Rdeg)) == "x1^2 + x0");
}
