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

// Motivic measures on the subring Z[Lv] ⊂ K_0(Var) spanned by the class
// Lv = [A^1] of the affine line.
//
// K_0(Var) itself is not modelled; catalog classes all lie in Z[Lv]. A field
// embedding k → C acts as the identity on these classes, so the Hodge–Tate
// conclusion transfers to every conjugate variety unchanged.

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "lefschetz/sparse_poly.hpp"
#include "lefschetz/tate_motive.hpp"
#include "lefschetz/varieties.hpp"

namespace lefschetz {

using Coefficient = std::int64_t;

/// Integer Laurent polynomial in Lv.
class K0Class {
public:
    using Terms = std::map<Exponent, Coefficient>;

    K0Class() = default;
    explicit K0Class(const Terms& terms) : poly_(terms) {}

    static K0Class lefschetz_class(Exponent l = 1, Coefficient c = 1) {
        return K0Class(SparsePoly<Exponent, Coefficient>::monomial(l, c));
    }

    const Terms& terms() const noexcept { return poly_.terms(); }
    Coefficient coefficient(Exponent l) const { return poly_.coefficient(l); }
    bool is_zero() const noexcept { return poly_.is_zero(); }

    /// `1 + 2*Lv + Lv^2`, `1 - Lv`; zero is `0`.
    std::string to_string() const;

    friend K0Class operator+(const K0Class& a, const K0Class& b) { return K0Class(a.poly_ + b.poly_); }
    friend K0Class operator*(const K0Class& a, const K0Class& b) { return K0Class(a.poly_ * b.poly_); }
    friend bool operator==(const K0Class&, const K0Class&) = default;

private:
    explicit K0Class(SparsePoly<Exponent, Coefficient> p) : poly_(std::move(p)) {}

    SparsePoly<Exponent, Coefficient> poly_;
};

/// Integer polynomial in u, v keyed by bidegree (p, q).
/// Bidegrees may be negative only for images of Laurent classes.
class HodgeDelignePoly {
public:
    using Terms = std::map<Bidegree, Coefficient>;

    HodgeDelignePoly() = default;
    explicit HodgeDelignePoly(const Terms& terms) : poly_(terms) {}

    const Terms& terms() const noexcept { return poly_.terms(); }
    Coefficient coefficient(Exponent p, Exponent q) const { return poly_.coefficient({p, q}); }

    /// `1 + u*v + u^2*v^2`, ascending (p, q); zero is `0`.
    std::string to_string() const;

    friend HodgeDelignePoly operator+(const HodgeDelignePoly& a, const HodgeDelignePoly& b) {
        return HodgeDelignePoly(a.poly_ + b.poly_);
    }
    friend HodgeDelignePoly operator*(const HodgeDelignePoly& a, const HodgeDelignePoly& b) {
        return HodgeDelignePoly(a.poly_ * b.poly_);
    }
    friend bool operator==(const HodgeDelignePoly&, const HodgeDelignePoly&) = default;

private:
    explicit HodgeDelignePoly(SparsePoly<Bidegree, Coefficient> p) : poly_(std::move(p)) {}

    SparsePoly<Bidegree, Coefficient> poly_;
};

/// [X] = Σ mult(l) Lv^l. Throws DomainFailure ("opaque-motive") when the
/// motive of `e` has non-Tate summands.
K0Class k0_class(const VarietyExpr& e);

/// Lv^l ↦ L^l. Throws DomainFailure ("virtual-class") on negative coefficients.
TateMotive chi_gs(const K0Class& c);

/// Ring homomorphism determined by Lv ↦ uv. Virtual classes are allowed;
/// negative powers of Lv land in Z[u, v, (uv)^-1].
HodgeDelignePoly chi_hd(const K0Class& c);

/// Every monomial u^p v^q with nonzero coefficient has p = q.
bool hodge_tate(const HodgeDelignePoly& p);

/// h^{p,q}; for a Tate motive only h^{l,l} = mult(l) is nonzero.
/// Throws InvalidArgument on non-effective input.
std::map<Bidegree, Multiplicity> hodge_numbers(const TateMotive& m);

}  // namespace lefschetz
