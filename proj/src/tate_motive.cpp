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

#include "lefschetz/tate_motive.hpp"

#include <algorithm>
#include <sstream>

namespace lefschetz {

namespace {

// Renders Σ c·sym^e in ascending order; `monomial` returns "" for e = 0.
template <class Terms, class Mono>
std::string render_terms(const Terms& terms, Mono&& monomial) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        std::string m = monomial(e);
        if (m.empty()) {
            os << c;
        } else if (c == 1) {
            os << m;
        } else {
            os << c << '*' << m;
        }
    }
    return os.str();
}

}  // namespace

TateMotive TateMotive::lefschetz_power(Exponent l, Multiplicity mult) {
    return TateMotive(SparsePoly<Exponent, Multiplicity>::monomial(l, mult));
}

bool TateMotive::effective() const {
    return is_zero() || terms().begin()->first >= 0;
}

Exponent TateMotive::min_exponent() const {
    if (is_zero()) throw InvalidArgument("empty-motive", "zero motive has no exponents");
    return terms().begin()->first;
}

Exponent TateMotive::max_exponent() const {
    if (is_zero()) throw InvalidArgument("empty-motive", "zero motive has no exponents");
    return terms().rbegin()->first;
}

std::string TateMotive::to_string() const {
    return render_terms(terms(), [](Exponent e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return "L";
        return "L^" + std::to_string(e);
    });
}

TateMotive direct_sum(const TateMotive& a, const TateMotive& b) {
    return TateMotive(a.poly_ + b.poly_);
}

TateMotive tensor(const TateMotive& a, const TateMotive& b) {
    return TateMotive(a.poly_ * b.poly_);
}

TateMotive twist(const TateMotive& a, Exponent r) {
    TateMotive::Terms shifted;
    for (const auto& [l, m] : a.terms()) shifted.emplace(detail::checked_sub(l, r), m);
    return TateMotive(shifted);
}

Multiplicity hom_dim(const TateMotive& x, const TateMotive& y) {
    Multiplicity d = 0;
    for (const auto& [l, m] : x.terms()) {
        d = detail::checked_add(d, detail::checked_mul(m, y.multiplicity(l)));
    }
    return d;
}

PoincarePoly poincare(const TateMotive& x) {
    if (!x.effective()) {
        throw InvalidArgument("non-effective",
                              "motive " + x.to_string() + " has negative exponents and no Weil realization");
    }
    PoincarePoly::Terms t;
    for (const auto& [l, m] : x.terms()) t.emplace(detail::checked_mul(2, l), m);
    return PoincarePoly(t);
}

PoincarePoly::PoincarePoly(const Terms& terms) : poly_(terms) {
    if (!poly_.is_zero() && poly_.terms().begin()->first < 0) {
        throw InvalidArgument("negative-degree", "cohomological degrees must be non-negative");
    }
}

bool PoincarePoly::odd_vanishing() const {
    return std::none_of(terms().begin(), terms().end(),
                        [](const auto& kv) { return kv.first % 2 != 0; });
}

Multiplicity PoincarePoly::max_even_coefficient() const {
    Multiplicity best = 0;
    for (const auto& [n, c] : terms()) {
        if (n % 2 == 0) best = std::max(best, c);
    }
    return best;
}

std::string PoincarePoly::to_string() const {
    return render_terms(terms(), [](Exponent e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return "t";
        return "t^" + std::to_string(e);
    });
}

PoincarePoly operator+(const PoincarePoly& a, const PoincarePoly& b) {
    PoincarePoly r;
    r.poly_ = a.poly_ + b.poly_;
    return r;
}

PoincarePoly operator*(const PoincarePoly& a, const PoincarePoly& b) {
    PoincarePoly r;
    r.poly_ = a.poly_ * b.poly_;
    return r;
}

}  // namespace lefschetz
