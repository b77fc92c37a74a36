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

// Bookkeeping for exceptional collections and semi-orthogonal decompositions.
//
// The categorical hypotheses (that a list of pieces really is a full
// exceptional collection or an SOD) are inputs; only their additive
// consequences are checked here.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/tate_motive.hpp"

namespace lefschetz {

enum class PieceKind { Exceptional, Opaque };

/// One piece C^j of an SOD. `nc_rank` is n_j, the number of ⊗-units in the
/// rationalized noncommutative motive of the piece.
struct SODPiece {
    std::string label;
    PieceKind kind = PieceKind::Exceptional;
    std::optional<Multiplicity> nc_rank;

    static SODPiece exceptional(std::string label) { return {std::move(label), PieceKind::Exceptional, 1}; }
    static SODPiece opaque(std::string label, std::optional<Multiplicity> rank = std::nullopt) {
        return {std::move(label), PieceKind::Opaque, rank};
    }

    friend bool operator==(const SODPiece&, const SODPiece&) = default;
};

/// Ordered, non-empty list of pieces. Exceptional pieces always carry
/// nc_rank 1.
class Collection {
public:
    /// Throws InvalidArgument when empty or when an exceptional piece has an
    /// nc_rank other than 1 (a missing rank is filled in).
    explicit Collection(std::vector<SODPiece> pieces);

    const std::vector<SODPiece>& pieces() const noexcept { return pieces_; }
    std::size_t length() const noexcept { return pieces_.size(); }
    bool all_exceptional() const;

    friend bool operator==(const Collection&, const Collection&) = default;

private:
    std::vector<SODPiece> pieces_;
};

/// Concatenation ⟨a, b⟩.
Collection concatenate(const Collection& a, const Collection& b);

/// Fills the (at most one) unknown nc_rank so that Σ n_j = rank(total).
/// Throws InvalidArgument if `total` is not effective, DomainFailure with
/// code "inconsistent-ranks" or "underdetermined" otherwise.
Collection solve_nc_ranks(const Collection& c, const TateMotive& total);

/// Rank of E(C^j) = E(k)^{⊕ n_j} for an additive invariant E whose value on
/// the base field has rank `unit_value_rank`.
Multiplicity additive_invariant_rank(const SODPiece& piece, Multiplicity unit_value_rank);

enum class FecVerdict { Ok, FailsOddVanishing, FailsLengthBound };

std::string to_string(FecVerdict v);

struct FecReport {
    FecVerdict verdict;
    /// Lower bound on the length of any full exceptional collection: the
    /// largest even Betti number.
    Multiplicity min_length;
    /// First offending degree, when the verdict is a failure.
    std::optional<Exponent> offending_degree;
};

/// Necessary conditions for a full exceptional collection of length m:
/// odd cohomology vanishes and every even Betti number is at most m.
FecReport fec_obstruction(const PoincarePoly& betti, std::optional<Multiplicity> length = std::nullopt);

struct FanoFecResult {
    bool admits_collection = false;
    std::optional<TateMotive> motive;
    std::optional<Multiplicity> length;
};

/// A Fano threefold admits a full exceptional collection iff M^1(X), M^5(X)
/// and M^1(J) are trivial; its motive is then 1 + b·L + b·L^2 + L^3.
FanoFecResult fano_fec_check(Multiplicity b, bool m1_trivial, bool m5_trivial, bool m1j_trivial);

}  // namespace lefschetz
