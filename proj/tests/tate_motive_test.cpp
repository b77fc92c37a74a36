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

#include <limits>

#include "lefschetz/error.hpp"
#include "lefschetz/tate_motive.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lefschetz;

namespace {

TateMotive from_cells(const oracle::CellCounts& cells) {
    TateMotive::Terms t;
    for (const auto& [d, c] : cells) t[d] = static_cast<Multiplicity>(c);
    return TateMotive(t);
}

const TateMotive kUnit = TateMotive::unit();
const TateMotive kL = TateMotive::lefschetz_power(1);

}  // namespace

TEST_CASE("direct sum") {
    CHECK(direct_sum(kUnit, kUnit) == TateMotive(TateMotive::Terms{{0, 2}}));
    CHECK(direct_sum(kUnit, kL) == TateMotive({{0, 1}, {1, 1}}));
    const TateMotive x({{0, 1}, {3, 4}});
    CHECK(direct_sum(TateMotive(), x) == x);
}

TEST_CASE("tensor") {
    CHECK(tensor(kL, TateMotive::lefschetz_power(2)) == TateMotive::lefschetz_power(3));
    // P^1 x P^1 by cell counting
    const auto cells = oracle::product_cells(oracle::projective_cells(1), oracle::projective_cells(1));
    CHECK(tensor(kUnit + kL, kUnit + kL) == from_cells(cells));
    CHECK(tensor(kUnit + kL, kUnit + kL) == TateMotive({{0, 1}, {1, 2}, {2, 1}}));
    const TateMotive x({{-1, 2}, {4, 1}});
    CHECK(tensor(x, kUnit) == x);
    CHECK(tensor(x, TateMotive()).is_zero());
}

TEST_CASE("twist") {
    CHECK(twist(TateMotive::lefschetz_power(2), 2) == kUnit);
    CHECK(twist(kUnit, -3) == TateMotive::lefschetz_power(3));
    const auto t = twist(kUnit + kL, 1);
    CHECK(t == TateMotive({{-1, 1}, {0, 1}}));
    CHECK_FALSE(t.effective());
}

TEST_CASE("hom_dim") {
    for (Exponent p = -3; p <= 3; ++p) {
        for (Exponent q = -3; q <= 3; ++q) {
            CHECK(hom_dim(TateMotive::lefschetz_power(p), TateMotive::lefschetz_power(q)) == (p == q ? 1u : 0u));
        }
    }
    // basis pairs with matching exponents
    const TateMotive x({{0, 1}, {1, 1}});
    Multiplicity pairs = 0;
    for (const auto& [a, ma] : x.terms()) {
        for (const auto& [b, mb] : x.terms()) pairs += a == b ? ma * mb : 0;
    }
    CHECK(hom_dim(x, x) == pairs);
    CHECK(hom_dim(x, x) == 2);
    CHECK(hom_dim(TateMotive(), x) == 0);
}

TEST_CASE("poincare") {
    CHECK(poincare(kUnit + kL + TateMotive::lefschetz_power(2)) == PoincarePoly({{0, 1}, {2, 1}, {4, 1}}));
    CHECK(poincare(kUnit) == PoincarePoly(PoincarePoly::Terms{{0, 1}}));
    CHECK(poincare(TateMotive({{0, 1}, {1, 2}, {2, 1}})).to_string() == "1 + 2*t^2 + t^4");
    CHECK_THROWS_AS(poincare(TateMotive::lefschetz_power(-1)), InvalidArgument);
    CHECK(poincare(TateMotive()).to_string() == "0");
}

TEST_CASE("text forms") {
    CHECK(TateMotive({{0, 1}, {1, 1}, {2, 2}}).to_string() == "1 + L + 2*L^2");
    CHECK(TateMotive().to_string() == "0");
    CHECK(TateMotive({{-1, 1}, {0, 3}}).to_string() == "L^-1 + 3");
    CHECK(TateMotive::lefschetz_power(5, 2).to_string() == "2*L^5");
}

TEST_CASE("construction edge cases") {
    CHECK(TateMotive(TateMotive::Terms{{2, 0}}).is_zero());
    CHECK(TateMotive::lefschetz_power(4, 0).is_zero());
    CHECK_THROWS_AS(PoincarePoly(PoincarePoly::Terms{{-2, 1}}), InvalidArgument);
    const TateMotive x({{-2, 1}, {7, 1}});
    CHECK(x.min_exponent() == -2);
    CHECK(x.max_exponent() == 7);
    CHECK(x.rank() == 2);
}

TEST_CASE("overflow is reported") {
    const auto big = TateMotive::lefschetz_power(0, std::numeric_limits<Multiplicity>::max());
    CHECK_THROWS_AS(direct_sum(big, kUnit), InvalidArgument);
    CHECK_THROWS_AS(tensor(big, TateMotive(TateMotive::Terms{{0, 2}})), InvalidArgument);
    CHECK_THROWS_AS(twist(TateMotive::lefschetz_power(std::numeric_limits<Exponent>::min()), 1), InvalidArgument);
}

TEST_CASE("ring axioms on random motives") {
    gen::Rng rng(0x7a7e);
    for (int it = 0; it < 500; ++it) {
        const auto a = gen::motive(rng, -3, 3);
        const auto b = gen::motive(rng, -3, 3);
        const auto c = gen::motive(rng, -3, 3);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + TateMotive() == a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * kUnit == a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b).rank() == a.rank() + b.rank());
        CHECK((a * b).rank() == a.rank() * b.rank());
        CHECK(hom_dim(a * kL, b * kL) == hom_dim(a, b));
        const auto r = gen::uniform(rng, -4, 4);
        CHECK(twist(twist(a, r), -r) == a);
        CHECK(hom_dim(twist(a, r), twist(b, r)) == hom_dim(a, b));
    }
}

TEST_CASE("poincare is a homomorphism on effective motives") {
    gen::Rng rng(0xbe77);
    for (int it = 0; it < 500; ++it) {
        const auto a = gen::motive(rng, 0, 4);
        const auto b = gen::motive(rng, 0, 4);
        CHECK(poincare(a * b) == poincare(a) * poincare(b));
        CHECK(poincare(a + b) == poincare(a) + poincare(b));
        const auto p = poincare(a);
        CHECK(p.odd_vanishing());
        CHECK(p.max_even_coefficient() <= a.rank());
    }
}
