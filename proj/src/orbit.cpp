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

#include "lefschetz/orbit.hpp"

#include <algorithm>
#include <string>

namespace lefschetz {

namespace {

std::vector<Exponent> basis_exponents(const TateMotive& x) {
    std::vector<Exponent> out;
    out.reserve(x.rank());
    for (const auto& [l, m] : x.terms()) out.insert(out.end(), m, l);
    return out;
}

// Entry (i, j) of a grade-r component may be nonzero only if b_i - r = a_j.
void check_pattern(const std::vector<Exponent>& src, const std::vector<Exponent>& tgt, Exponent r,
                   const RationalMatrix& m) {
    if (m.rows() != tgt.size() || m.cols() != src.size()) {
        throw InvalidArgument("shape-mismatch",
                              "component at grade " + std::to_string(r) + " has shape " + std::to_string(m.rows()) +
                                  "x" + std::to_string(m.cols()) + ", expected " + std::to_string(tgt.size()) + "x" +
                                  std::to_string(src.size()));
    }
    for (std::size_t i = 0; i < tgt.size(); ++i) {
        for (std::size_t j = 0; j < src.size(); ++j) {
            if (m(i, j) != 0 && tgt[i] - r != src[j]) {
                throw InvalidArgument("pattern-violation",
                                      "entry (" + std::to_string(i) + "," + std::to_string(j) + ") at grade " +
                                          std::to_string(r) + " maps L^" + std::to_string(src[j]) + " to L^" +
                                          std::to_string(tgt[i]) + " (x) Q(1)^" + std::to_string(r) +
                                          ", which has no nonzero morphisms");
            }
        }
    }
}

}  // namespace

TermEnumeration enumerate_terms(const TateMotive& x) {
    TermEnumeration out;
    out.reserve(x.rank());
    for (const auto& [l, m] : x.terms()) {
        for (Multiplicity i = 0; i < m; ++i) out.push_back({l, i});
    }
    return out;
}

OrbitMorphism::OrbitMorphism(TateMotive source, TateMotive target, Components components)
    : source_(std::move(source)), target_(std::move(target)) {
    const auto src = basis_exponents(source_);
    const auto tgt = basis_exponents(target_);
    for (auto& [r, m] : components) {
        check_pattern(src, tgt, r, m);
        if (!m.is_zero()) components_.emplace(r, std::move(m));
    }
}

OrbitMorphism OrbitMorphism::identity(const TateMotive& x) {
    const auto n = static_cast<std::size_t>(x.rank());
    Components c;
    if (n > 0) c.emplace(0, RationalMatrix::identity(n));
    return OrbitMorphism(x, x, std::move(c));
}

OrbitMorphism OrbitMorphism::zero(const TateMotive& source, const TateMotive& target) {
    return OrbitMorphism(source, target, {});
}

RationalMatrix OrbitMorphism::component(Exponent r) const {
    auto it = components_.find(r);
    if (it != components_.end()) return it->second;
    return RationalMatrix(static_cast<std::size_t>(target_.rank()), static_cast<std::size_t>(source_.rank()));
}

std::set<Exponent> OrbitMorphism::support() const {
    std::set<Exponent> s;
    for (const auto& [r, m] : components_) s.insert(r);
    return s;
}

ChowMorphism::ChowMorphism(TateMotive source, TateMotive target, RationalMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    check_pattern(basis_exponents(source_), basis_exponents(target_), 0, matrix_);
}

ChowMorphism ChowMorphism::identity(const TateMotive& x) {
    return ChowMorphism(x, x, RationalMatrix::identity(static_cast<std::size_t>(x.rank())));
}

ChowMorphism compose(const ChowMorphism& g, const ChowMorphism& f) {
    if (!(f.target() == g.source())) {
        throw InvalidArgument("type-mismatch", "cannot compose: target " + f.target().to_string() +
                                                   " differs from source " + g.source().to_string());
    }
    return ChowMorphism(f.source(), g.target(), g.matrix() * f.matrix());
}

std::map<Exponent, Multiplicity> orbit_hom_support(const TateMotive& x, const TateMotive& y) {
    // Hom(x, y ⊗ Q(1)^r) is nonzero only when r = b - a for exponents a of x, b of y.
    std::set<Exponent> grades;
    for (const auto& [a, ma] : x.terms()) {
        for (const auto& [b, mb] : y.terms()) grades.insert(detail::checked_sub(b, a));
    }
    std::map<Exponent, Multiplicity> out;
    for (Exponent r : grades) {
        Multiplicity d = hom_dim(x, twist(y, r));
        if (d != 0) out.emplace(r, d);
    }
    return out;
}

OrbitMorphism compose(const OrbitMorphism& g, const OrbitMorphism& f) {
    if (!(f.target() == g.source())) {
        throw InvalidArgument("type-mismatch", "cannot compose: target " + f.target().to_string() +
                                                   " differs from source " + g.source().to_string());
    }
    // Twisting g_{l-r} by Q(1)^r relabels its objects but leaves the matrix
    // unchanged in the canonical bases, so the l-th component is a plain
    // sum of matrix products.
    OrbitMorphism::Components out;
    for (const auto& [r, fr] : f.components()) {
        for (const auto& [s, gs] : g.components()) {
            const Exponent l = detail::checked_add(r, s);
            RationalMatrix prod = gs * fr;
            auto [it, inserted] = out.try_emplace(l, prod);
            if (!inserted) it->second += prod;
        }
    }
    return OrbitMorphism(f.source(), g.target(), std::move(out));
}

OrbitObject project(const TateMotive& x) { return OrbitObject{x}; }

OrbitMorphism project_morphism(const ChowMorphism& m) {
    return OrbitMorphism(m.source(), m.target(), {{0, m.matrix()}});
}

std::pair<OrbitMorphism, OrbitMorphism> canonical_unit_iso(Exponent l) {
    const TateMotive unit = TateMotive::unit();
    const TateMotive power = TateMotive::lefschetz_power(l);
    RationalMatrix one = RationalMatrix::identity(1);
    OrbitMorphism u(unit, power, {{l, one}});
    OrbitMorphism v(power, unit, {{-l, one}});
    return {std::move(u), std::move(v)};
}

std::pair<OrbitMorphism, OrbitMorphism> block_isomorphism(const TateMotive& source, const TateMotive& target) {
    if (source.rank() != target.rank()) {
        throw InvalidArgument("rank-mismatch", "orbit isomorphism needs equal ranks, got " +
                                                   std::to_string(source.rank()) + " and " +
                                                   std::to_string(target.rank()));
    }
    const auto src = basis_exponents(source);
    const auto tgt = basis_exponents(target);
    const std::size_t n = src.size();
    OrbitMorphism::Components fwd;
    OrbitMorphism::Components bwd;
    for (std::size_t i = 0; i < n; ++i) {
        const Exponent r = detail::checked_sub(tgt[i], src[i]);
        auto& a = fwd.try_emplace(r, n, n).first->second;
        a(i, i) = 1;
        auto& b = bwd.try_emplace(-r, n, n).first->second;
        b(i, i) = 1;
    }
    return {OrbitMorphism(source, target, std::move(fwd)), OrbitMorphism(target, source, std::move(bwd))};
}

LiftError::LiftError(Kind kind, const std::string& message)
    : DomainFailure(kind == Kind::NotAnIsomorphism   ? "not-an-isomorphism"
                    : kind == Kind::SupportViolation ? "support-violation"
                                                     : "rank-mismatch",
                    message),
      kind_(kind) {}

std::vector<Exponent> decompose_via_orbit(const TateMotive& motive, const OrbitMorphism& f, const OrbitMorphism& g,
                                          Exponent dim) {
    if (dim < 0) throw InvalidArgument("bad-dimension", "dimension must be non-negative");
    const Multiplicity m = f.target().rank();
    const TateMotive units = TateMotive::lefschetz_power(0, m);
    if (!(f.source() == motive) || !(f.target() == units) || !(g.source() == units) || !(g.target() == motive)) {
        throw InvalidArgument("type-mismatch",
                              "expected f: M -> 1^m and g: 1^m -> M for M = " + motive.to_string());
    }

    for (Exponent r : f.support()) {
        if (r < -dim || r > 0) {
            throw LiftError(LiftError::Kind::SupportViolation,
                            "f has a nonzero component at grade " + std::to_string(r) + " outside {-" +
                                std::to_string(dim) + ",...,0}");
        }
    }
    for (Exponent s : g.support()) {
        if (s < 0 || s > dim) {
            throw LiftError(LiftError::Kind::SupportViolation,
                            "g has a nonzero component at grade " + std::to_string(s) + " outside {0,...," +
                                std::to_string(dim) + "}");
        }
    }
    if (!motive.is_zero() && (motive.min_exponent() < 0 || motive.max_exponent() > dim)) {
        throw LiftError(LiftError::Kind::SupportViolation,
                        "motive " + motive.to_string() + " has exponents outside {0,...," + std::to_string(dim) + "}");
    }

    if (!(compose(g, f) == OrbitMorphism::identity(motive))) {
        throw LiftError(LiftError::Kind::NotAnIsomorphism, "g o f is not the identity of " + motive.to_string());
    }
    if (!(compose(f, g) == OrbitMorphism::identity(units))) {
        throw LiftError(LiftError::Kind::NotAnIsomorphism, "f o g is not the identity of 1^" + std::to_string(m));
    }

    // Φ: M → ⊕_l ⊕_j L^l has block f_{-l}; Ψ has block g_l. Ψ∘Φ is the
    // grade-0 part of g∘f.
    const auto n = static_cast<std::size_t>(motive.rank());
    RationalMatrix psi_phi(n, n);
    for (Exponent l = 0; l <= dim; ++l) psi_phi += g.component(l) * f.component(-l);
    if (!(psi_phi == RationalMatrix::identity(n))) {
        throw LiftError(LiftError::Kind::NotAnIsomorphism, "Psi o Phi is not the identity");
    }

    // Φ∘Ψ is an idempotent on ⊕_l ⊕_j L^l, block diagonal in l since
    // Hom(L^p, L^q) = 0 for p ≠ q. The image of the l-th block is the
    // subsum of S at level l, of dimension rank(f_{-l} g_l).
    std::vector<Exponent> exponents;
    for (Exponent l = 0; l <= dim; ++l) {
        RationalMatrix block = f.component(-l) * g.component(l);
        if (!(block * block == block)) {
            throw LiftError(LiftError::Kind::NotAnIsomorphism,
                            "Phi o Psi is not idempotent at level " + std::to_string(l));
        }
        exponents.insert(exponents.end(), block.rank(), l);
    }

    if (exponents.size() != m) {
        throw LiftError(LiftError::Kind::RankMismatch, "recovered " + std::to_string(exponents.size()) +
                                                           " summands but the unit sum has " + std::to_string(m));
    }
    TateMotive recovered;
    for (Exponent l : exponents) recovered = recovered + TateMotive::lefschetz_power(l);
    if (!(recovered == motive)) {
        throw LiftError(LiftError::Kind::RankMismatch,
                        "recovered " + recovered.to_string() + " but the source is " + motive.to_string());
    }
    return exponents;
}

}  // namespace lefschetz
