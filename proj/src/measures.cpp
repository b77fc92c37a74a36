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

#include "lefschetz/measures.hpp"

#include <limits>
#include <sstream>

#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

std::string power(const char* sym, Exponent e) {
    if (e == 1) return sym;
    return std::string(sym) + "^" + std::to_string(e);
}

// Signed rendering: "a + b - c", leading minus attached.
template <class Terms, class Mono>
std::string render_signed(const Terms& terms, Mono&& monomial) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms) {
        const bool negative = c < 0;
        const auto mag64 = negative ? std::uint64_t{0} - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const std::string m = monomial(key);
        if (m.empty()) {
            os << mag64;
        } else if (mag64 == 1) {
            os << m;
        } else {
            os << mag64 << '*' << m;
        }
    }
    return os.str();
}

}  // namespace

std::string K0Class::to_string() const {
    return render_signed(terms(), [](Exponent e) -> std::string { return e == 0 ? "" : power("Lv", e); });
}

std::string HodgeDelignePoly::to_string() const {
    return render_signed(terms(), [](const Bidegree& pq) -> std::string {
        std::string s;
        if (pq.first != 0) s = power("u", pq.first);
        if (pq.second != 0) s += (s.empty() ? "" : "*") + power("v", pq.second);
        return s;
    });
}

K0Class k0_class(const VarietyExpr& e) {
    const GeneralizedMotive m = motive_of(e);
    if (!m.is_tate()) {
        throw DomainFailure("opaque-motive", "motive " + m.to_string() + " has non-Tate summands; its class is not in Z[Lv]");
    }
    K0Class::Terms t;
    for (const auto& [l, mult] : m.tate.terms()) {
        if (mult > static_cast<Multiplicity>(std::numeric_limits<Coefficient>::max())) {
            throw InvalidArgument("overflow", "multiplicity does not fit a class coefficient");
        }
        t.emplace(l, static_cast<Coefficient>(mult));
    }
    return K0Class(t);
}

TateMotive chi_gs(const K0Class& c) {
    TateMotive::Terms t;
    for (const auto& [l, coeff] : c.terms()) {
        if (coeff < 0) {
            throw DomainFailure("virtual-class", "class " + c.to_string() + " has a negative coefficient at Lv^" +
                                                     std::to_string(l) + "; it is not the class of a motive");
        }
        t.emplace(l, static_cast<Multiplicity>(coeff));
    }
    return TateMotive(t);
}

HodgeDelignePoly chi_hd(const K0Class& c) {
    HodgeDelignePoly::Terms t;
    for (const auto& [l, coeff] : c.terms()) t.emplace(Bidegree{l, l}, coeff);
    return HodgeDelignePoly(t);
}

bool hodge_tate(const HodgeDelignePoly& p) {
    for (const auto& [pq, c] : p.terms()) {
        if (pq.first != pq.second) return false;
    }
    return true;
}

std::map<Bidegree, Multiplicity> hodge_numbers(const TateMotive& m) {
    if (!m.effective()) {
        throw InvalidArgument("non-effective", "motive " + m.to_string() + " has negative exponents");
    }
    std::map<Bidegree, Multiplicity> h;
    for (const auto& [l, mult] : m.terms()) h.emplace(Bidegree{l, l}, mult);
    return h;
}

}  // namespace lefschetz
