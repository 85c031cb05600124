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
#include <random>
#include <string>
#include <vector>

#include "logfree/poly.hpp"

namespace logfree::testing {

// Deterministic pseudo-random polynomial factory for property tests.
// All draws flow through one engine so a fixed seed pins the whole suite.
class RandomPolys {
public:
    explicit RandomPolys(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    long pick_int(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    Scalar nonzero_scalar(const FieldSpec& field) {
        while (true) {
            Scalar s = scalar(field);
            if (!s.is_zero()) return s;
        }
    }

    Scalar scalar(const FieldSpec& field) {
        if (field.is_rationals())
            return Scalar::of_int(field, pick_int(-9, 9));
        return Scalar::of_int(field, pick_int(0, static_cast<long>(field.characteristic()) - 1));
    }

    Monomial monomial(std::size_t nvars, std::uint32_t max_deg) {
        std::vector<std::uint32_t> e(nvars, 0);
        std::uint32_t total = static_cast<std::uint32_t>(pick_int(0, max_deg));
        for (std::uint32_t t = 0; t < total; ++t)
            e[static_cast<std::size_t>(pick_int(0, static_cast<long>(nvars) - 1))] += 1;
        return Monomial(std::move(e));
    }

    Monomial monomial_of_degree(std::size_t nvars, std::uint32_t deg) {
        std::vector<std::uint32_t> e(nvars, 0);
        for (std::uint32_t t = 0; t < deg; ++t)
            e[static_cast<std::size_t>(pick_int(0, static_cast<long>(nvars) - 1))] += 1;
        return Monomial(std::move(e));
    }

    Poly poly(const RingPtr& ring, std::uint32_t max_deg, std::size_t max_terms) {
        std::vector<Poly::Term> ts;
        const std::size_t k = static_cast<std::size_t>(pick_int(0, static_cast<long>(max_terms)));
        for (std::size_t i = 0; i < k; ++i)
            ts.emplace_back(monomial(ring->nvars(), max_deg), scalar(ring->field));
        return Poly::from_terms(ring, std::move(ts));
    }

    Poly nonzero_poly(const RingPtr& ring, std::uint32_t max_deg, std::size_t max_terms) {
        while (true) {
            Poly p = poly(ring, max_deg, max_terms);
            if (!p.is_zero()) return p;
        }
    }

    Poly homogeneous_poly(const RingPtr& ring, std::uint32_t deg, std::size_t max_terms) {
        while (true) {
            std::vector<Poly::Term> ts;
            const std::size_t k = static_cast<std::size_t>(pick_int(1, static_cast<long>(max_terms)));
            for (std::size_t i = 0; i < k; ++i)
                ts.emplace_back(monomial_of_degree(ring->nvars(), deg), nonzero_scalar(ring->field));
            Poly p = Poly::from_terms(ring, std::move(ts));
            if (!p.is_zero()) return p;
        }
    }

private:
    std::mt19937_64 rng_;
};

inline std::vector<std::string> var_names(std::size_t n, const std::string& base = "x") {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(base + std::to_string(i));
    return v;
}

} // namespace logfree::testing
