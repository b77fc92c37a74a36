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
#include <string>

#include "lefschetz/sparse_poly.hpp"

namespace lefschetz {

using Multiplicity = std::uint64_t;

/// A Tate motive  ⊕_l L^{⊗l}^{⊕ mult(l)}  in Chow(k)_Q, stored as the
/// finitely supported map l ↦ mult(l). Exponent 0 is the unit 1 = M(Spec k).
///
/// The full subcategory on these objects is skeletal: two Tate motives are
/// isomorphic iff their multiplicity maps agree, so `==` is isomorphism.
class TateMotive {
public:
    using Terms = std::map<Exponent, Multiplicity>;

    /// The zero object.
    TateMotive() = default;
    explicit TateMotive(const Terms& terms) : poly_(terms) {}

    static TateMotive unit() { return lefschetz_power(0); }
    static TateMotive lefschetz_power(Exponent l, Multiplicity mult = 1);

    const Terms& terms() const noexcept { return poly_.terms(); }
    Multiplicity multiplicity(Exponent l) const { return poly_.coefficient(l); }
    Multiplicity rank() const { return poly_.coefficient_sum(); }
    bool is_zero() const noexcept { return poly_.is_zero(); }

    /// All exponents ≥ 0.
    bool effective() const;

    Exponent min_exponent() const;
    Exponent max_exponent() const;

    /// Canonical text, ascending exponents: `1 + L + 2*L^2`; zero is `0`.
    std::string to_string() const;

    friend bool operator==(const TateMotive&, const TateMotive&) = default;

private:
    friend TateMotive direct_sum(const TateMotive&, const TateMotive&);
    friend TateMotive tensor(const TateMotive&, const TateMotive&);

    explicit TateMotive(SparsePoly<Exponent, Multiplicity> p) : poly_(std::move(p)) {}

    SparsePoly<Exponent, Multiplicity> poly_;
};

/// Betti-type realization: degree n ↦ dim H^n.
class PoincarePoly {
public:
    using Terms = std::map<Exponent, Multiplicity>;

    PoincarePoly() = default;
    /// Throws InvalidArgument on negative degrees.
    explicit PoincarePoly(const Terms& terms);

    const Terms& terms() const noexcept { return poly_.terms(); }
    Multiplicity coefficient(Exponent degree) const { return poly_.coefficient(degree); }

    bool odd_vanishing() const;
    Multiplicity max_even_coefficient() const;

    /// `1 + 2*t^2 + t^4`; zero is `0`.
    std::string to_string() const;

    friend PoincarePoly operator+(const PoincarePoly& a, const PoincarePoly& b);
    friend PoincarePoly operator*(const PoincarePoly& a, const PoincarePoly& b);
    friend bool operator==(const PoincarePoly&, const PoincarePoly&) = default;

private:
    SparsePoly<Exponent, Multiplicity> poly_;
};

TateMotive direct_sum(const TateMotive& a, const TateMotive& b);
TateMotive tensor(const TateMotive& a, const TateMotive& b);

/// Tensor with Q(1)^{⊗r}: every exponent l becomes l - r.
TateMotive twist(const TateMotive& a, Exponent r);

/// dim_Q Hom(x, y) = Σ_l mult_x(l) · mult_y(l)   (Hom(L^p, L^q) = δ_pq Q).
Multiplicity hom_dim(const TateMotive& x, const TateMotive& y);

/// H^{2l} has dimension mult(l), odd degrees vanish.
/// Throws InvalidArgument for non-effective motives.
PoincarePoly poincare(const TateMotive& x);

inline TateMotive operator+(const TateMotive& a, const TateMotive& b) { return direct_sum(a, b); }
inline TateMotive operator*(const TateMotive& a, const TateMotive& b) { return tensor(a, b); }

}  // namespace lefschetz
