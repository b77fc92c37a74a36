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

#include "lefschetz/json.hpp"

#include <charconv>

#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidArgument("bad-json", what); }

std::int64_t parse_key(const std::string& key) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc() || ptr != key.data() + key.size() || key.empty()) bad("not an integer key: '" + key + "'");
    return v;
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object()) bad("expected an object");
    auto it = j.find(name);
    if (it == j.end()) bad(std::string("missing field '") + name + "'");
    return *it;
}

std::int64_t int_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) bad(std::string("field '") + name + "' must be an integer");
    return v.get<std::int64_t>();
}

template <class Coeff>
std::map<Exponent, Coeff> term_map(const Json& j, bool allow_negative) {
    const Json& terms = field(j, "terms");
    if (!terms.is_object()) bad("'terms' must be an object");
    std::map<Exponent, Coeff> out;
    for (const auto& [k, v] : terms.items()) {
        if (!v.is_number_integer()) bad("coefficient of '" + k + "' must be an integer");
        const auto c = v.template get<std::int64_t>();
        if (!allow_negative && c < 0) bad("coefficient of '" + k + "' must be non-negative");
        if (!out.emplace(parse_key(k), static_cast<Coeff>(c)).second) bad("duplicate key '" + k + "'");
    }
    return out;
}

}  // namespace

Json to_json(const TateMotive& m) {
    Json terms = Json::object();
    for (const auto& [l, mult] : m.terms()) terms[std::to_string(l)] = mult;
    return Json{{"terms", terms}};
}

TateMotive tate_motive_from_json(const Json& j) { return TateMotive(term_map<Multiplicity>(j, false)); }

Json to_json(const PoincarePoly& p) {
    Json terms = Json::object();
    for (const auto& [n, c] : p.terms()) terms[std::to_string(n)] = c;
    return Json{{"terms", terms}};
}

Json to_json(const OrbitMorphism& f) {
    Json comps = Json::object();
    for (const auto& [r, m] : f.components()) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_to_string(m(i, k)));
            rows.push_back(std::move(row));
        }
        comps[std::to_string(r)] = std::move(rows);
    }
    return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"components", comps}};
}

OrbitMorphism orbit_morphism_from_json(const Json& j) {
    TateMotive source = tate_motive_from_json(field(j, "source"));
    TateMotive target = tate_motive_from_json(field(j, "target"));
    const auto rows = static_cast<std::size_t>(target.rank());
    const auto cols = static_cast<std::size_t>(source.rank());
    const Json& comps = field(j, "components");
    if (!comps.is_object()) bad("'components' must be an object");
    OrbitMorphism::Components out;
    for (const auto& [k, v] : comps.items()) {
        if (!v.is_array() || v.size() != rows) bad("component '" + k + "' must have " + std::to_string(rows) + " rows");
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            const Json& row = v[i];
            if (!row.is_array() || row.size() != cols) {
                bad("row " + std::to_string(i) + " of component '" + k + "' must have " + std::to_string(cols) +
                    " entries");
            }
            for (std::size_t c = 0; c < cols; ++c) {
                const Json& e = row[c];
                if (e.is_string()) {
                    m(i, c) = parse_rational(e.get<std::string>());
                } else if (e.is_number_integer()) {
                    m(i, c) = parse_rational(std::to_string(e.get<std::int64_t>()));
                } else {
                    bad("matrix entries must be rationals written as \"p/q\"");
                }
            }
        }
        if (!out.emplace(parse_key(k), std::move(m)).second) bad("duplicate grade '" + k + "'");
    }
    return OrbitMorphism(std::move(source), std::move(target), std::move(out));
}

Json to_json(const SODPiece& p) {
    Json j{{"label", p.label}, {"kind", p.kind == PieceKind::Exceptional ? "exceptional" : "opaque"}};
    if (p.nc_rank) j["ncRank"] = *p.nc_rank;
    return j;
}

Json to_json(const Collection& c) {
    Json pieces = Json::array();
    for (const auto& p : c.pieces()) pieces.push_back(to_json(p));
    return Json{{"pieces", pieces}};
}

Collection collection_from_json(const Json& j) {
    const Json& pieces = field(j, "pieces");
    if (!pieces.is_array()) bad("'pieces' must be an array");
    std::vector<SODPiece> out;
    for (const Json& p : pieces) {
        const Json& label = field(p, "label");
        const Json& kind = field(p, "kind");
        if (!label.is_string()) bad("piece label must be a string");
        if (!kind.is_string()) bad("piece kind must be a string");
        SODPiece piece;
        piece.label = label.get<std::string>();
        const auto k = kind.get<std::string>();
        if (k == "exceptional") {
            piece.kind = PieceKind::Exceptional;
        } else if (k == "opaque") {
            piece.kind = PieceKind::Opaque;
        } else {
            bad("piece kind must be 'exceptional' or 'opaque', got '" + k + "'");
        }
        if (auto it = p.find("ncRank"); it != p.end() && !it->is_null()) {
            if (!it->is_number_integer() || it->get<std::int64_t>() < 0) bad("ncRank must be a non-negative integer");
            piece.nc_rank = it->get<Multiplicity>();
        }
        out.push_back(std::move(piece));
    }
    return Collection(std::move(out));
}

Json to_json(const VarietyExpr& e) {
    return std::visit(
        [](const auto& n) -> Json {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, expr::Point>) {
                return Json{{"type", "point"}};
            } else if constexpr (std::is_same_v<T, expr::Projective>) {
                return Json{{"type", "projective"}, {"n", n.n}};
            } else if constexpr (std::is_same_v<T, expr::Quadric>) {
                return Json{{"type", "quadric"}, {"d", n.d}};
            } else if constexpr (std::is_same_v<T, expr::Grassmannian>) {
                return Json{{"type", "grassmannian"}, {"k", n.k}, {"n", n.n}};
            } else if constexpr (std::is_same_v<T, expr::Toric>) {
                return Json{{"type", "toric"}, {"cones", n.cones}};
            } else if constexpr (std::is_same_v<T, expr::Product>) {
                return Json{{"type", "product"}, {"lhs", to_json(*n.lhs)}, {"rhs", to_json(*n.rhs)}};
            } else if constexpr (std::is_same_v<T, expr::DisjointUnion>) {
                return Json{{"type", "disjoint_union"}, {"lhs", to_json(*n.lhs)}, {"rhs", to_json(*n.rhs)}};
            } else if constexpr (std::is_same_v<T, expr::Blowup>) {
                return Json{{"type", "blowup"},
                            {"base", to_json(*n.base)},
                            {"center", to_json(*n.center)},
                            {"codim", n.codim}};
            } else if constexpr (std::is_same_v<T, expr::ProjBundle>) {
                return Json{{"type", "projbundle"}, {"base", to_json(*n.base)}, {"rank", n.rank}};
            } else if constexpr (std::is_same_v<T, expr::ModuliM0>) {
                return Json{{"type", "moduli_m0"}, {"n", n.n}};
            } else {
                return Json{{"type", "fano"}, {"b", n.b}, {"odd_trivial", n.odd_trivial}};
            }
        },
        e.node());
}

ExprPtr variety_expr_from_json(const Json& j) {
    const Json& type = field(j, "type");
    if (!type.is_string()) bad("'type' must be a string");
    const auto t = type.get<std::string>();
    ExprPtr e;
    if (t == "point") {
        e = point();
    } else if (t == "projective") {
        e = projective(int_field(j, "n"));
    } else if (t == "quadric") {
        e = quadric(int_field(j, "d"));
    } else if (t == "grassmannian") {
        e = grassmannian(int_field(j, "k"), int_field(j, "n"));
    } else if (t == "toric") {
        const Json& cones = field(j, "cones");
        if (!cones.is_array()) bad("'cones' must be an array");
        std::vector<std::int64_t> v;
        for (const Json& c : cones) {
            if (!c.is_number_integer()) bad("cone counts must be integers");
            v.push_back(c.get<std::int64_t>());
        }
        e = toric(std::move(v));
    } else if (t == "product") {
        e = product(variety_expr_from_json(field(j, "lhs")), variety_expr_from_json(field(j, "rhs")));
    } else if (t == "disjoint_union") {
        e = disjoint_union(variety_expr_from_json(field(j, "lhs")), variety_expr_from_json(field(j, "rhs")));
    } else if (t == "blowup") {
        e = blowup(variety_expr_from_json(field(j, "base")), variety_expr_from_json(field(j, "center")),
                   int_field(j, "codim"));
    } else if (t == "projbundle") {
        e = proj_bundle(variety_expr_from_json(field(j, "base")), int_field(j, "rank"));
    } else if (t == "moduli_m0") {
        e = moduli_m0(int_field(j, "n"));
    } else if (t == "fano") {
        const Json& odd = field(j, "odd_trivial");
        if (!odd.is_boolean()) bad("'odd_trivial' must be a boolean");
        e = fano3fold(int_field(j, "b"), odd.get<bool>());
    } else {
        bad("unknown expression type '" + t + "'");
    }
    return e;
}

Json to_json(const OpaquePart& p) {
    return Json{{"name", p.name}, {"odd", p.odd}, {"twist", p.twist}, {"degree", p.degree}};
}

Json to_json(const GeneralizedMotive& m) {
    Json opaque = Json::array();
    for (const auto& p : m.opaque) opaque.push_back(to_json(p));
    return Json{{"tate", to_json(m.tate)}, {"opaque", opaque}};
}

Json to_json(const K0Class& c) {
    Json terms = Json::object();
    for (const auto& [l, coeff] : c.terms()) terms[std::to_string(l)] = coeff;
    return Json{{"terms", terms}};
}

K0Class k0_class_from_json(const Json& j) { return K0Class(term_map<Coefficient>(j, true)); }

Json to_json(const HodgeDelignePoly& p) {
    Json terms = Json::object();
    for (const auto& [pq, c] : p.terms()) terms[std::to_string(pq.first) + "," + std::to_string(pq.second)] = c;
    return Json{{"terms", terms}};
}

Json to_json(const FecReport& r) {
    Json j{{"verdict", to_string(r.verdict)}, {"minLength", r.min_length}};
    j["offendingDegree"] = r.offending_degree ? Json(*r.offending_degree) : Json(nullptr);
    return j;
}

}  // namespace lefschetz
