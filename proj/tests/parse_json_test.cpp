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

#include <doctest.h>

#include "lefschetz/json.hpp"
#include "lefschetz/parse.hpp"
#include "support/generators.hpp"

using namespace lefschetz;

namespace {

std::pair<std::string, std::size_t> parse_failure(std::string_view text) {
    try {
        parse_expr(text);
    } catch (const ParseError& e) {
        return {e.code(), e.offset()};
    } catch (const Error& e) {
        return {e.code(), std::string::npos};
    }
    return {"", 0};
}

// Random well-formed expression of bounded depth.
ExprPtr random_expr(gen::Rng& rng, int depth) {
    if (depth == 0 || gen::coin(rng, 0.4)) return gen::catalog_variety(rng);
    switch (gen::uniform(rng, 0, 3)) {
        case 0: return product(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 1: return disjoint_union(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 2: return proj_bundle(random_expr(rng, depth - 1), gen::uniform(rng, 1, 3));
        default: {
            const auto n = gen::uniform(rng, 2, 4);
            return blowup(projective(n), projective(n - 2), 2);
        }
    }
}

}  // namespace

TEST_CASE("parse examples") {
    CHECK(*parse_expr("P(2)") == *projective(2));
    CHECK(*parse_expr("P(1) * P(1)") == *product(projective(1), projective(1)));
    CHECK(*parse_expr("blowup(P(2); point; 2)") == *blowup(projective(2), point(), 2));
    CHECK(*parse_expr("fano(1; odd_trivial=false)") == *fano3fold(1, false));
    CHECK(*parse_expr("fano(2; true)") == *fano3fold(2, true));
    CHECK(*parse_expr("toric[1, 4, 4]") == *toric({1, 4, 4}));
    CHECK(*parse_expr(" Gr(2,4)\n") == *grassmannian(2, 4));
    CHECK(*parse_expr("M0(5)") == *moduli_m0(5));
    CHECK(*parse_expr("projbundle(Q(3); 2)") == *proj_bundle(quadric(3), 2));
}

TEST_CASE("precedence and associativity") {
    CHECK(*parse_expr("point + P(1) * P(2)") == *disjoint_union(point(), product(projective(1), projective(2))));
    CHECK(*parse_expr("(point + P(1)) * P(2)") == *product(disjoint_union(point(), projective(1)), projective(2)));
    CHECK(*parse_expr("P(1) * P(2) * P(3)") == *product(product(projective(1), projective(2)), projective(3)));
    CHECK(*parse_expr("point + point + point") == *disjoint_union(disjoint_union(point(), point()), point()));
}

TEST_CASE("syntax errors carry byte offsets") {
    CHECK(parse_failure("P(2") == std::pair<std::string, std::size_t>{"syntax-error", 3});
    CHECK(parse_failure("") == std::pair<std::string, std::size_t>{"syntax-error", 0});
    CHECK(parse_failure("P(2) *") == std::pair<std::string, std::size_t>{"syntax-error", 6});
    CHECK(parse_failure("X(1)") == std::pair<std::string, std::size_t>{"syntax-error", 0});
    CHECK(parse_failure("P(2))").second == 4);
    CHECK(parse_failure("fano(1; maybe)").first == "syntax-error");
    CHECK(parse_failure("P(99999999999999999999)").first == "syntax-error");
    try {
        parse_expr("P(1) ? P(2)");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("syntax error at byte 5", 0) == 0);
    }
}

TEST_CASE("semantic errors carry node paths") {
    CHECK(parse_failure("P(-1)").first == "invalid-parameter");
    try {
        parse_expr("point * blowup(P(2); P(1); 2)");
        FAIL("expected a semantic error");
    } catch (const InvalidArgument& e) {
        CHECK(e.code() == "invalid-parameter");
        CHECK(std::string(e.what()).rfind("$.rhs:", 0) == 0);
    }
}

TEST_CASE("render round trip") {
    gen::Rng rng(0x7e47);
    for (int it = 0; it < 500; ++it) {
        const auto e = random_expr(rng, 3);
        const auto text = render(*e);
        const auto back = parse_expr(text);
        CHECK(*back == *e);
        CHECK(render(*back) == text);
        CHECK(*variety_expr_from_json(to_json(*e)) == *e);
    }
}

TEST_CASE("json motive forms") {
    const TateMotive m({{0, 1}, {1, 1}, {2, 2}});
    CHECK(to_json(m).dump() == R"j({"terms":{"0":1,"1":1,"2":2}})j");
    CHECK(tate_motive_from_json(to_json(m)) == m);
    CHECK_THROWS_AS(tate_motive_from_json(Json::parse(R"j({"terms":{"0":-1}})j")), InvalidArgument);
    CHECK_THROWS_AS(tate_motive_from_json(Json::parse(R"j({"terms":{"x":1}})j")), InvalidArgument);
    CHECK_THROWS_AS(tate_motive_from_json(Json::parse(R"j({"nope":{}})j")), InvalidArgument);
    const K0Class c({{-1, -2}, {3, 4}});
    CHECK(k0_class_from_json(to_json(c)) == c);
}

TEST_CASE("json morphisms") {
    const auto [u, v] = canonical_unit_iso(2);
    const auto j = to_json(u);
    CHECK(j.dump() == R"j({"source":{"terms":{"0":1}},"target":{"terms":{"2":1}},"components":{"2":[["1"]]}})j");
    CHECK(orbit_morphism_from_json(j) == u);
    gen::Rng rng(9);
    for (int it = 0; it < 50; ++it) {
        const auto a = gen::bounded_motive(rng, -2, 2, 4);
        const auto b = gen::bounded_motive(rng, -2, 2, 4);
        const auto f = gen::orbit_morphism(rng, a, b);
        CHECK(orbit_morphism_from_json(to_json(f)) == f);
    }
    auto bad = j;
    bad["components"]["0"] = Json::array({Json::array({"1"})});
    CHECK_THROWS_AS(orbit_morphism_from_json(bad), InvalidArgument);
    bad["components"] = Json{{"2", Json::array({Json::array({"1", "2"})})}};
    CHECK_THROWS_AS(orbit_morphism_from_json(bad), InvalidArgument);
    bad["components"] = Json{{"2", Json::array({Json::array({1.5})})}};
    CHECK_THROWS_AS(orbit_morphism_from_json(bad), InvalidArgument);
}

TEST_CASE("json collections and expressions") {
    const Collection c({SODPiece::opaque("Cl0(Q_3)"), SODPiece::exceptional("O")});
    const auto j = to_json(c);
    CHECK(j.dump() == R"j({"pieces":[{"label":"Cl0(Q_3)","kind":"opaque"},{"label":"O","kind":"exceptional","ncRank":1}]})j");
    CHECK(collection_from_json(j) == c);
    CHECK_THROWS_AS(collection_from_json(Json::parse(R"j({"pieces":[]})j")), InvalidArgument);
    CHECK_THROWS_AS(collection_from_json(Json::parse(R"j({"pieces":[{"label":"a","kind":"weird"}]})j")),
                    InvalidArgument);
    CHECK_THROWS_AS(variety_expr_from_json(Json::parse(R"j({"type":"sphere"})j")), InvalidArgument);
    CHECK_THROWS_AS(variety_expr_from_json(Json::parse(R"j({"type":"projective","n":"2"})j")), InvalidArgument);
    CHECK(to_json(*blowup(projective(2), point(), 2)).dump() ==
          R"j({"type":"blowup","base":{"type":"projective","n":2},"center":{"type":"point"},"codim":2})j");
}
