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
#include <string>

#include <gmpxx.h>

#include "logfree/error.hpp"

namespace logfree {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; the witness set below decides primality for
// every 64-bit integer.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace detail

/// Exact coefficient field: the rationals, or a prime field F_p.
class FieldSpec {
public:
    enum class Kind { Rationals, PrimeField };

    static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

    static FieldSpec prime_field(std::uint64_t p) {
        if (!detail::is_prime_u64(p))
            fail(ErrorCode::NotPrime, "field modulus " + std::to_string(p) + " is not prime");
        // Residues live in [0, p); keeping p below 2^62 makes a + b safe in
        // 64 bits and a * b safe in 128 bits.
        if (p >= (std::uint64_t{1} << 62))
            fail(ErrorCode::NotPrime, "field modulus too large (must be < 2^62)");
        return FieldSpec(Kind::PrimeField, p);
    }

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }
    bool is_prime_field() const { return kind_ == Kind::PrimeField; }

    /// 0 for the rationals, p for F_p.
    std::uint64_t characteristic() const { return p_; }

    std::string str() const {
        return is_rationals() ? "QQ" : "GF(" + std::to_string(p_) + ")";
    }

    bool operator==(const FieldSpec&) const = default;

private:
    FieldSpec(Kind k, std::uint64_t p) : kind_(k), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
};

/// An exact field element: an arbitrary-precision rational in lowest terms
/// with positive denominator, or a residue in [0, p).
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()), q_(0), r_(0) {}

    static Scalar zero(const FieldSpec& f) { return Scalar(f); }

    static Scalar one(const FieldSpec& f) {
        Scalar s(f);
        if (f.is_rationals())
            s.q_ = 1;
        else
            s.r_ = 1 % f.characteristic();
        return s;
    }

    static Scalar of_int(const FieldSpec& f, long v) {
        Scalar s(f);
        if (f.is_rationals()) {
            s.q_ = v;
        } else {
            const std::uint64_t p = f.characteristic();
            long m = v % static_cast<long>(p);
            if (m < 0) m += static_cast<long>(p);
            s.r_ = static_cast<std::uint64_t>(m);
        }
        return s;
    }

    static Scalar of_integer(const FieldSpec& f, const mpz_class& z) {
        Scalar s(f);
        if (f.is_rationals()) {
            s.q_ = mpq_class(z);
        } else {
            s.r_ = mpz_fdiv_ui(z.get_mpz_t(), f.characteristic());
        }
        return s;
    }

    static Scalar of_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den) {
        if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
        if (f.is_rationals()) {
            Scalar s(f);
            s.q_ = mpq_class(num, den);
            s.q_.canonicalize();
            return s;
        }
        return of_integer(f, num) / of_integer(f, den);
    }

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return field_.is_rationals() ? q_ == 0 : r_ == 0; }
    bool is_one() const { return field_.is_rationals() ? q_ == 1 : r_ == 1; }
    bool is_negative() const { return field_.is_rationals() && q_ < 0; }

    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

    Scalar operator-() const {
        Scalar s(field_);
        if (field_.is_rationals()) {
            s.q_ = -q_;
        } else {
            const std::uint64_t p = field_.characteristic();
            s.r_ = r_ == 0 ? 0 : p - r_;
        }
        return s;
    }

    Scalar operator+(const Scalar& o) const {
        check_field(o);
        Scalar s(field_);
        if (field_.is_rationals())
            s.q_ = q_ + o.q_;
        else
            s.r_ = (r_ + o.r_) % field_.characteristic();
        return s;
    }

    Scalar operator-(const Scalar& o) const {
        check_field(o);
        Scalar s(field_);
        if (field_.is_rationals()) {
            s.q_ = q_ - o.q_;
        } else {
            const std::uint64_t p = field_.characteristic();
            s.r_ = (r_ + p - o.r_) % p;
        }
        return s;
    }

    Scalar operator*(const Scalar& o) const {
        check_field(o);
        Scalar s(field_);
        if (field_.is_rationals())
            s.q_ = q_ * o.q_;
        else
            s.r_ = detail::mulmod_u64(r_, o.r_, field_.characteristic());
        return s;
    }

    Scalar inverse() const {
        if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
        Scalar s(field_);
        if (field_.is_rationals()) {
            s.q_ = 1 / q_;
        } else {
            const std::uint64_t p = field_.characteristic();
            s.r_ = detail::powmod_u64(r_, p - 2, p);
        }
        return s;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        if (field_ != o.field_) return false;
        return field_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Absolute value; identity over a prime field (residues carry no sign).
    Scalar abs() const {
        if (field_.is_rationals() && q_ < 0) return -*this;
        return *this;
    }

    std::string str() const {
        return field_.is_rationals() ? q_.get_str() : std::to_string(r_);
    }

private:
    explicit Scalar(const FieldSpec& f) : field_(f), q_(0), r_(0) {}

    void check_field(const Scalar& o) const {
        if (field_ != o.field_)
            fail(ErrorCode::FieldMismatch,
                 "scalar fields differ: " + field_.str() + " vs " + o.field_.str());
    }

    FieldSpec field_;
    mpq_class q_;
    std::uint64_t r_ = 0;
};

} // namespace logfree
