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

#include <functional>

#include "lefschetz/measures.hpp"
#include "support/generators.hpp"

using namespace lefschetz;

namespace {

K0Class lv(Exponent l = 1, Coefficient c = 1) { return K0Class::lefschetz_class(l, c); }
const K0Class kOne = K0Class::lefschetz_class(0);

HodgeDelignePoly uv(Exponent l, Coefficient c = 1) { return HodgeDelignePoly({{{l, l}, c}}); }

std::string code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST_CASE("k0_class") {
    CHECK(k0_class(*projective(1)) == kOne + lv());
    CHECK(k0_class(*disjoint_union(point(), point())) == K0Class::lefschetz_class(0, 2));
    CHECK(k0_class(*quadric(2)) == kOne + lv(1, 2) + lv(2));
    CHECK(k0_class(*product(projective(1), projective(1))).to_string() == "1 + 2*Lv + Lv^2");
    CHECK(code_of([] { k0_class(*fano3fold(1, false)); }) == "opaque-motive");
}

TEST_CASE("text forms") {
    CHECK(K0Class().to_string() == "0");
    CHECK((kOne + lv(1, -1)).to_string() == "1 - Lv");
    CHECK((lv(-2, -3) + lv(1)).to_string() == "-3*Lv^-2 + Lv");
    CHECK(HodgeDelignePoly().to_string() == "0");
    CHECK((uv(0) + uv(1) + uv(2)).to_string() == "1 + u*v + u^2*v^2");
    CHECK(HodgeDelignePoly({{{1, 0}, 1}, {{0, 1}, -2}}).to_string() == "-2*v + u");
}

TEST_CASE("chi_GS") {
    CHECK(chi_gs(kOne + lv()) == TateMotive({{0, 1}, {1, 1}}));
    CHECK(chi_gs(K0Class()).is_zero());
    CHECK(chi_gs(kOne + lv(1, 2) + lv(2)) == TateMotive({{0, 1}, {1, 2}, {2, 1}}));
    CHECK(code_of([] { chi_gs(kOne + lv(1, -1)); }) == "virtual-class");
}

TEST_CASE("chi_HD") {
    CHECK(chi_hd(kOne + lv() + lv(2)) == uv(0) + uv(1) + uv(2));
    CHECK(chi_hd(K0Class()) == HodgeDelignePoly());
    // (1 + Lv)^2 expanded by hand: 1 + 2uv + (uv)^2
    const K0Class p1 = kOne + lv();
    CHECK(chi_hd(p1 * p1) == uv(0) + uv(1, 2) + uv(2));
    CHECK(chi_hd(p1) * chi_hd(p1) == uv(0) + uv(1, 2) + uv(2));
    CHECK(chi_hd(lv(-1)) == uv(-1));
    CHECK(chi_hd(kOne + lv(1, -1)) == uv(0) + uv(1, -1));
}

TEST_CASE("hodge_tate and hodge_numbers") {
    CHECK(hodge_tate(uv(0) + uv(1)));
    CHECK_FALSE(hodge_tate(HodgeDelignePoly({{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}})));
    CHECK(hodge_tate(chi_hd(k0_class(*quadric(3)))));
    CHECK(hodge_tate(HodgeDelignePoly()));

    using H = std::map<Bidegree, Multiplicity>;
    CHECK(hodge_numbers(TateMotive({{0, 1}, {1, 1}})) == H{{{0, 0}, 1}, {{1, 1}, 1}});
    CHECK(hodge_numbers(motive_of(*projective(3)).tate) == H{{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}, {{3, 3}, 1}});
    CHECK(hodge_numbers(TateMotive({{0, 1}, {1, 2}, {2, 1}})) == H{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}});
    CHECK(code_of([] { hodge_numbers(TateMotive::lefschetz_power(-1)); }) == "non-effective");
}

TEST_CASE("measures are ring homomorphisms") {
    gen::Rng rng(0x3ea5);
    for (int it = 0; it < 1000; ++it) {
        const auto a = gen::k0(rng, -3, 3);
        const auto b = gen::k0(rng, -3, 3);
        CHECK(chi_hd(a + b) == chi_hd(a) + chi_hd(b));
        CHECK(chi_hd(a * b) == chi_hd(a) * chi_hd(b));
        CHECK(hodge_tate(chi_hd(a)));

        const auto c = gen::effective_k0(rng, 4);
        const auto d = gen::effective_k0(rng, 4);
        CHECK(chi_gs(c + d) == chi_gs(c) + chi_gs(d));
        CHECK(chi_gs(c * d) == chi_gs(c) * chi_gs(d));
    }
    CHECK(chi_gs(kOne) == TateMotive::unit());
    CHECK(chi_hd(kOne) == uv(0));
}

TEST_CASE("catalog classes") {
    gen::Rng rng(0xc1a5);
    for (int it = 0; it < 200; ++it) {
        const auto e = gen::catalog_variety(rng);
        const auto m = motive_of(*e).tate;
        CHECK(chi_gs(k0_class(*e)) == m);
        const auto hd = chi_hd(k0_class(*e));
        CHECK(hodge_tate(hd));
        for (const auto& [pq, h] : hodge_numbers(m)) CHECK(hd.coefficient(pq.first, pq.second) == static_cast<Coefficient>(h));
    }
}
