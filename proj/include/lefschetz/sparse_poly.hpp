// Copyright 2026 The lefschetz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "lefschetz/error.hpp"

namespace lefschetz {

/// Exponent of a monomial. Signed so that twisted (non-effective) objects
/// and Laurent classes are representable.
using Exponent = std::int64_t;

/// Bidegree (p, q) of a monomial u^p v^q.
using Bidegree = std::pair<Exponent, Exponent>;

namespace detail {

inline Exponent add_keys(Exponent a, Exponent b) { return checked_add(a, b); }

inline Bidegree add_keys(const Bidegree& a, const Bidegree& b) {
    return {checked_add(a.first, b.first), checked_add(a.second, b.second)};
}

}  // namespace detail

/// Sparse polynomial: finitely supported map from monomial key to a nonzero
/// coefficient. Zero coefficients are never stored, so map equality is
/// polynomial equality.
///
/// Key must be totally ordered and support `detail::add_keys`; Coeff is one
/// of std::uint64_t / std::int64_t (overflow-checked).
template <class Key, class Coeff>
class SparsePoly {
public:
    using Terms = std::map<Key, Coeff>;

    SparsePoly() = default;

    explicit SparsePoly(const Terms& terms) {
        for (const auto& [k, c] : terms) {
            if (c != Coeff{0}) terms_.emplace(k, c);
        }
    }

    static SparsePoly monomial(const Key& k, Coeff c = Coeff{1}) {
        SparsePoly p;
        if (c != Coeff{0}) p.terms_.emplace(k, c);
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Coeff coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Coeff{0} : it->second;
    }

    SparsePoly& operator+=(const SparsePoly& other) {
        for (const auto& [k, c] : other.terms_) accumulate(k, c);
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) {
        a += b;
        return a;
    }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                r.accumulate(detail::add_keys(ka, kb), detail::checked_mul(ca, cb));
            }
        }
        return r;
    }

    /// Sum of all coefficients.
    Coeff coefficient_sum() const {
        Coeff s{0};
        for (const auto& [k, c] : terms_) s = detail::checked_add(s, c);
        return s;
    }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    void accumulate(const Key& k, Coeff c) {
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second = detail::checked_add(it->second, c);
            if (it->second == Coeff{0}) terms_.erase(it);
        }
    }

    Terms terms_;
};

}  // namespace lefschetz
