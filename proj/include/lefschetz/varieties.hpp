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

// Catalog of smooth proper varieties (and DM stacks) with known motives.
//
// A VarietyExpr is an immutable AST. Every entry point validates the tree
// first and reports parameter errors with the path of the offending node,
// e.g. "$.lhs.center".

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "lefschetz/sod.hpp"
#include "lefschetz/tate_motive.hpp"

namespace lefschetz {

class VarietyExpr;
using ExprPtr = std::shared_ptr<const VarietyExpr>;

namespace expr {

struct Point {
    friend bool operator==(const Point&, const Point&) = default;
};
struct Projective {
    std::int64_t n;
    friend bool operator==(const Projective&, const Projective&) = default;
};
/// Smooth split quadric of dimension d.
struct Quadric {
    std::int64_t d;
    friend bool operator==(const Quadric&, const Quadric&) = default;
};
struct Grassmannian {
    std::int64_t k;
    std::int64_t n;
    friend bool operator==(const Grassmannian&, const Grassmannian&) = default;
};
/// Smooth complete toric variety given by its cone counts: cones[j] is the
/// number of j-dimensional cones of the fan.
struct Toric {
    std::vector<std::int64_t> cones;
    friend bool operator==(const Toric&, const Toric&) = default;
};
struct Product {
    ExprPtr lhs;
    ExprPtr rhs;
};
struct DisjointUnion {
    ExprPtr lhs;
    ExprPtr rhs;
};
/// Blow-up of `base` along a smooth `center` of codimension `codim`.
struct Blowup {
    ExprPtr base;
    ExprPtr center;
    std::int64_t codim;
};
/// Projectivization of a rank-r vector bundle over `base`.
struct ProjBundle {
    ExprPtr base;
    std::int64_t rank;
};
/// Moduli space of stable n-pointed genus-zero curves, 3 ≤ n ≤ 5.
struct ModuliM0 {
    std::int64_t n;
    friend bool operator==(const ModuliM0&, const ModuliM0&) = default;
};
/// Fano threefold with b = b_2 = b_4; `odd_trivial` declares M^1(X), M^5(X)
/// and M^1(J) trivial.
struct Fano3fold {
    std::int64_t b;
    bool odd_trivial;
    friend bool operator==(const Fano3fold&, const Fano3fold&) = default;
};

}  // namespace expr

class VarietyExpr {
public:
    using Node = std::variant<expr::Point, expr::Projective, expr::Quadric, expr::Grassmannian, expr::Toric,
                              expr::Product, expr::DisjointUnion, expr::Blowup, expr::ProjBundle, expr::ModuliM0,
                              expr::Fano3fold>;

    explicit VarietyExpr(Node node) : node_(std::move(node)) {}

    const Node& node() const noexcept { return node_; }

    friend bool operator==(const VarietyExpr& a, const VarietyExpr& b);

private:
    Node node_;
};

ExprPtr point();
ExprPtr projective(std::int64_t n);
ExprPtr quadric(std::int64_t d);
ExprPtr grassmannian(std::int64_t k, std::int64_t n);
ExprPtr toric(std::vector<std::int64_t> cones);
ExprPtr product(ExprPtr a, ExprPtr b);
ExprPtr disjoint_union(ExprPtr a, ExprPtr b);
ExprPtr blowup(ExprPtr base, ExprPtr center, std::int64_t codim);
ExprPtr proj_bundle(ExprPtr base, std::int64_t rank);
ExprPtr moduli_m0(std::int64_t n);
ExprPtr fano3fold(std::int64_t b, bool odd_trivial);

/// Summand of a motive with no Tate presentation (Picard, Albanese and
/// intermediate-Jacobian pieces), tensored with L^twist. It carries no rank;
/// `degree` is the lowest cohomological degree it underlies, odd iff `odd`.
struct OpaquePart {
    std::string name;
    bool odd = true;
    std::int64_t twist = 0;
    std::int64_t degree = 1;

    /// `name`, `name*L` or `name*L^t`.
    std::string to_string() const;

    friend bool operator==(const OpaquePart&, const OpaquePart&) = default;
};

struct GeneralizedMotive {
    TateMotive tate;
    std::vector<OpaquePart> opaque;

    /// True iff the motive is a sum of Lefschetz powers.
    bool is_tate() const noexcept { return opaque.empty(); }

    /// `1 + L + L^2 + M1(X)`: the Tate part, then opaque names in order.
    std::string to_string() const;

    friend bool operator==(const GeneralizedMotive&, const GeneralizedMotive&) = default;
};

enum class QuadricCollection {
    /// Full exceptional collection with spinor bundles (algebraically closed field).
    Kapranov,
    /// ⟨D^b(Cl_0), O(-d+1), …, O⟩ over a non-closed field.
    Kuznetsov,
};

/// Throws InvalidArgument (code "invalid-parameter") naming the node path.
void validate(const VarietyExpr& e);

std::int64_t dimension_of(const VarietyExpr& e);

GeneralizedMotive motive_of(const VarietyExpr& e);

/// Throws DomainFailure (code "no-collection") for constructors without a
/// known full exceptional collection or SOD.
Collection exceptional_collection_of(const VarietyExpr& e,
                                     QuadricCollection quadrics = QuadricCollection::Kapranov);

/// Explicit blow-up model used for M̄_{0,n}: a point, P^1, and P^2 blown up
/// in four points.
ExprPtr moduli_m0_model(std::int64_t n);

/// Lower bound for the Betti numbers: the realization of the Tate part plus
/// a coefficient 1 in the degree of every odd opaque part, recording that
/// this degree is nonzero.
PoincarePoly betti_lower_bound(const GeneralizedMotive& m);

/// Canonical expression text, the inverse of parse_expr.
std::string render(const VarietyExpr& e);

}  // namespace lefschetz
