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

#include <cctype>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "logfree/poly.hpp"

namespace logfree {

// Expression grammar (UTF-8 text, ASCII tokens):
//
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := ('-' | '+')* atom ('^' INT)*
//   atom    := INT ('/' INT)? | IDENT | '(' expr ')'
//
// Juxtaposition is not multiplication; '/' appears only inside a rational
// literal; '^' takes a non-negative integer literal. Reported positions are
// 0-based byte offsets into the input.
namespace detail {

enum class TokKind { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        const std::size_t start = i_;
        if (i_ >= s_.size()) return {TokKind::End, "", start};
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return {TokKind::Int, std::string(s_.substr(start, i_ - start)), start};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            return {TokKind::Ident, std::string(s_.substr(start, i_ - start)), start};
        }
        ++i_;
        switch (c) {
            case '+': return {TokKind::Plus, "+", start};
            case '-': return {TokKind::Minus, "-", start};
            case '*': return {TokKind::Star, "*", start};
            case '^': return {TokKind::Caret, "^", start};
            case '/': return {TokKind::Slash, "/", start};
            case '(': return {TokKind::LParen, "(", start};
            case ')': return {TokKind::RParen, ")", start};
            default:
                throw Error(ErrorCode::SyntaxError,
                            std::string("unexpected character '") + c + "' at position " +
                                std::to_string(start))
                    .with_position(start);
        }
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

class PolyParser {
public:
    PolyParser(std::string_view text, RingPtr ring) : lex_(text), ring_(std::move(ring)) {
        for (std::size_t j = 0; j < ring_->nvars(); ++j) var_index_[ring_->vars[j]] = j;
        advance();
    }

    Poly parse() {
        Poly p = expr();
        expect(TokKind::End, "end of input");
        return p;
    }

private:
    void advance() { tok_ = lex_.next(); }

    void expect(TokKind k, const std::string& what) {
        if (tok_.kind != k)
            throw Error(ErrorCode::SyntaxError,
                        "expected " + what + " at position " + std::to_string(tok_.pos))
                .with_position(tok_.pos);
    }

    Poly expr() {
        Poly acc = term();
        while (tok_.kind == TokKind::Plus || tok_.kind == TokKind::Minus) {
            const bool minus = tok_.kind == TokKind::Minus;
            advance();
            Poly rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (tok_.kind == TokKind::Star) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    Poly factor() {
        bool neg = false;
        while (tok_.kind == TokKind::Minus || tok_.kind == TokKind::Plus) {
            if (tok_.kind == TokKind::Minus) neg = !neg;
            advance();
        }
        Poly base = atom();
        while (tok_.kind == TokKind::Caret) {
            const std::size_t caret_pos = tok_.pos;
            advance();
            if (tok_.kind != TokKind::Int)
                throw Error(ErrorCode::NonIntegerExponent,
                            "exponent must be a non-negative integer literal at position " +
                                std::to_string(caret_pos))
                    .with_position(tok_.pos);
            unsigned long e = 0;
            try {
                e = std::stoul(tok_.text);
            } catch (const std::exception&) {
                throw Error(ErrorCode::NonIntegerExponent,
                            "exponent out of range at position " + std::to_string(tok_.pos))
                    .with_position(tok_.pos);
            }
            advance();
            base = poly_pow(base, e);
        }
        return neg ? -base : base;
    }

    Poly atom() {
        switch (tok_.kind) {
            case TokKind::Int: {
                mpz_class num(tok_.text);
                advance();
                if (tok_.kind == TokKind::Slash) {
                    advance();
                    expect(TokKind::Int, "denominator digits");
                    mpz_class den(tok_.text);
                    advance();
                    return Poly::constant(ring_, Scalar::of_fraction(ring_->field, num, den));
                }
                return Poly::constant(ring_, Scalar::of_integer(ring_->field, num));
            }
            case TokKind::Ident: {
                auto it = var_index_.find(tok_.text);
                if (it == var_index_.end())
                    throw Error(ErrorCode::UnknownVariable,
                                "unknown variable '" + tok_.text + "' at position " +
                                    std::to_string(tok_.pos))
                        .with_position(tok_.pos);
                Poly v = Poly::variable(ring_, it->second);
                advance();
                return v;
            }
            case TokKind::LParen: {
                advance();
                Poly p = expr();
                expect(TokKind::RParen, "')'");
                advance();
                return p;
            }
            default:
                throw Error(ErrorCode::SyntaxError,
                            "expected a number, variable or '(' at position " +
                                std::to_string(tok_.pos))
                    .with_position(tok_.pos);
        }
    }

    Lexer lex_;
    Token tok_{TokKind::End, "", 0};
    RingPtr ring_;
    std::unordered_map<std::string, std::size_t> var_index_;
};

} // namespace detail

inline Poly parse_poly(std::string_view text, const RingPtr& ring) {
    return detail::PolyParser(text, ring).parse();
}

inline Poly parse_poly(std::string_view text, const std::vector<std::string>& vars,
                       const FieldSpec& field,
                       MonomialOrder order = MonomialOrder::grevlex()) {
    return parse_poly(text, make_ring(field, vars, order));
}

} // namespace logfree
