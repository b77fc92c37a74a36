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

#include "lefschetz/sod.hpp"

#include <algorithm>

#include "lefschetz/error.hpp"

namespace lefschetz {

Collection::Collection(std::vector<SODPiece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw InvalidArgument("empty-collection", "a collection needs at least one piece");
    for (auto& p : pieces_) {
        if (p.kind != PieceKind::Exceptional) continue;
        if (!p.nc_rank) p.nc_rank = 1;
        if (*p.nc_rank != 1) {
            throw InvalidArgument("bad-piece", "exceptional piece '" + p.label + "' must have ncRank 1, got " +
                                                   std::to_string(*p.nc_rank));
        }
    }
}

bool Collection::all_exceptional() const {
    return std::all_of(pieces_.begin(), pieces_.end(),
                       [](const SODPiece& p) { return p.kind == PieceKind::Exceptional; });
}

Collection concatenate(const Collection& a, const Collection& b) {
    std::vector<SODPiece> v = a.pieces();
    v.insert(v.end(), b.pieces().begin(), b.pieces().end());
    return Collection(std::move(v));
}

Collection solve_nc_ranks(const Collection& c, const TateMotive& total) {
    if (!total.effective()) {
        throw InvalidArgument("non-effective", "total motive " + total.to_string() + " is not effective");
    }
    const Multiplicity m = total.rank();
    Multiplicity known = 0;
    std::vector<std::size_t> unknown;
    for (std::size_t j = 0; j < c.length(); ++j) {
        const auto& p = c.pieces()[j];
        if (p.nc_rank) {
            known = detail::checked_add(known, *p.nc_rank);
        } else {
            unknown.push_back(j);
        }
    }
    if (unknown.size() > 1) {
        std::string labels;
        for (auto j : unknown) labels += (labels.empty() ? "" : ", ") + c.pieces()[j].label;
        throw DomainFailure("underdetermined", "ranks of several pieces are unknown (" + labels +
                                                   "); the total rank does not determine them individually");
    }
    if (known > m) {
        throw DomainFailure("inconsistent-ranks", "known ranks sum to " + std::to_string(known) +
                                                      " which exceeds the motive rank " + std::to_string(m));
    }
    std::vector<SODPiece> pieces = c.pieces();
    if (unknown.empty()) {
        if (known != m) {
            throw DomainFailure("inconsistent-ranks", "ranks sum to " + std::to_string(known) +
                                                          " but the motive rank is " + std::to_string(m));
        }
    } else {
        pieces[unknown.front()].nc_rank = m - known;
    }
    return Collection(std::move(pieces));
}

Multiplicity additive_invariant_rank(const SODPiece& piece, Multiplicity unit_value_rank) {
    if (!piece.nc_rank) {
        throw InvalidArgument("unknown-rank", "piece '" + piece.label + "' has no known ncRank");
    }
    if (unit_value_rank == 0) throw InvalidArgument("bad-unit-rank", "rank of E(k) must be positive");
    return detail::checked_mul(*piece.nc_rank, unit_value_rank);
}

std::string to_string(FecVerdict v) {
    switch (v) {
        case FecVerdict::Ok:
            return "ok";
        case FecVerdict::FailsOddVanishing:
            return "fails-odd-vanishing";
        case FecVerdict::FailsLengthBound:
            return "fails-length-bound";
    }
    return "unknown";
}

FecReport fec_obstruction(const PoincarePoly& betti, std::optional<Multiplicity> length) {
    FecReport report{FecVerdict::Ok, betti.max_even_coefficient(), std::nullopt};
    for (const auto& [n, c] : betti.terms()) {
        if (n % 2 != 0) {
            report.verdict = FecVerdict::FailsOddVanishing;
            report.offending_degree = n;
            return report;
        }
    }
    if (length) {
        for (const auto& [n, c] : betti.terms()) {
            if (c > *length) {
                report.verdict = FecVerdict::FailsLengthBound;
                report.offending_degree = n;
                return report;
            }
        }
    }
    return report;
}

FanoFecResult fano_fec_check(Multiplicity b, bool m1_trivial, bool m5_trivial, bool m1j_trivial) {
    FanoFecResult r;
    r.admits_collection = m1_trivial && m5_trivial && m1j_trivial;
    if (r.admits_collection) {
        r.motive = TateMotive({{0, 1}, {1, b}, {2, b}, {3, 1}});
        r.length = detail::checked_add(Multiplicity{2}, detail::checked_mul(Multiplicity{2}, b));
    }
    return r;
}

}  // namespace lefschetz
