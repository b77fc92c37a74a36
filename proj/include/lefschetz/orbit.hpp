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

// The orbit category Chow(k)_Q / -⊗Q(1), restricted to Tate objects.
//
// A morphism X → Y is a finitely supported family {f_r}, r ∈ Z, with
// f_r ∈ Hom(X, Y ⊗ Q(1)^{⊗r}). After choosing the canonical basis of X and
// Y (one basis object L^{a} per unit of multiplicity, ascending exponent),
// f_r is a rank(Y) × rank(X) rational matrix whose entry (i, j) can only be
// nonzero when  b_i - r = a_j.

#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/rational_matrix.hpp"
#include "lefschetz/tate_motive.hpp"

namespace lefschetz {

/// One basis object L^{exponent} of a Tate motive; `index` counts copies of
/// the same exponent starting at 0.
struct BasisTerm {
    Exponent exponent;
    Multiplicity index;

    friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

using TermEnumeration = std::vector<BasisTerm>;

/// Ascending exponent, then copy index. Length equals rank.
TermEnumeration enumerate_terms(const TateMotive& x);

/// Object of the orbit category. Objects are those of Chow(k)_Q.
struct OrbitObject {
    TateMotive motive;
};

class OrbitMorphism {
public:
    using Components = std::map<Exponent, RationalMatrix>;

    /// Validates shapes and the twisted Kronecker pattern; zero components are
    /// dropped. Throws InvalidArgument.
    OrbitMorphism(TateMotive source, TateMotive target, Components components);

    static OrbitMorphism identity(const TateMotive& x);
    static OrbitMorphism zero(const TateMotive& source, const TateMotive& target);

    const TateMotive& source() const noexcept { return source_; }
    const TateMotive& target() const noexcept { return target_; }
    const Components& components() const noexcept { return components_; }

    /// Component at grade r (a zero matrix when r is outside the support).
    RationalMatrix component(Exponent r) const;

    std::set<Exponent> support() const;

    friend bool operator==(const OrbitMorphism&, const OrbitMorphism&) = default;

private:
    TateMotive source_;
    TateMotive target_;
    Components components_;
};

/// A morphism of Chow(k)_Q between Tate motives: a single matrix obeying the
/// untwisted Kronecker pattern.
class ChowMorphism {
public:
    ChowMorphism(TateMotive source, TateMotive target, RationalMatrix matrix);

    static ChowMorphism identity(const TateMotive& x);

    const TateMotive& source() const noexcept { return source_; }
    const TateMotive& target() const noexcept { return target_; }
    const RationalMatrix& matrix() const noexcept { return matrix_; }

    friend bool operator==(const ChowMorphism&, const ChowMorphism&) = default;

private:
    TateMotive source_;
    TateMotive target_;
    RationalMatrix matrix_;
};

ChowMorphism compose(const ChowMorphism& g, const ChowMorphism& f);

/// grade r ↦ dim Hom(x, y ⊗ Q(1)^{⊗r}); zero entries omitted.
std::map<Exponent, Multiplicity> orbit_hom_support(const TateMotive& x, const TateMotive& y);

/// (g ∘ f)_l = Σ_r (g_{l-r} ⊗ Q(1)^{⊗r}) ∘ f_r. Throws InvalidArgument when
/// f.target != g.source.
OrbitMorphism compose(const OrbitMorphism& g, const OrbitMorphism& f);

OrbitObject project(const TateMotive& x);
OrbitMorphism project_morphism(const ChowMorphism& m);

/// u: 1 → L^l at grade l and v: L^l → 1 at grade -l, both with entry 1.
std::pair<OrbitMorphism, OrbitMorphism> canonical_unit_iso(Exponent l);

/// Mutually inverse orbit morphisms between two Tate motives of equal rank,
/// matching the i-th basis term of `source` with the i-th basis term of
/// `target` through the canonical unit isomorphisms. Throws InvalidArgument
/// on rank mismatch.
std::pair<OrbitMorphism, OrbitMorphism> block_isomorphism(const TateMotive& source, const TateMotive& target);

/// Failure modes of the lift from an orbit-category isomorphism back to a
/// decomposition in Chow(k)_Q.
class LiftError : public DomainFailure {
public:
    enum class Kind { NotAnIsomorphism, SupportViolation, RankMismatch };

    LiftError(Kind kind, const std::string& message);

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Recovers the Lefschetz exponents of `motive` from a pair of mutually
/// inverse orbit morphisms  f: motive → 1^{⊕m},  g: 1^{⊕m} → motive.
///
/// f may only live in grades {-dim, …, 0} and g in {0, …, dim}. Assembles
/// Φ = (f_{-l})_l and Ψ = (g_l ⊗ Q(1)^{⊗ -l})_l, checks Ψ∘Φ = id, and reads the
/// multiplicity of L^l off the rank of the idempotent block f_{-l} g_l.
/// The result is sorted ascending and has exactly m entries.
std::vector<Exponent> decompose_via_orbit(const TateMotive& motive, const OrbitMorphism& f,
                                          const OrbitMorphism& g, Exponent dim);

}  // namespace lefschetz
