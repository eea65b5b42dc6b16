/*
   Copyright 2026 The cyclobez authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cyclobez/modpoly.hpp"

#include <stdexcept>

#include "cyclobez/cyclotomic.hpp"
#include "doctest.h"
#include "testgen.hpp"

using namespace cyclobez;

namespace {

ModPoly random_modpoly(testgen::Rng& rng, std::uint64_t p, std::size_t max_degree) {
    const long len = testgen::draw(rng, 0, static_cast<long>(max_degree) + 1);
    std::vector<std::uint64_t> cs(static_cast<std::size_t>(len));
    for (auto& c : cs) c = static_cast<std::uint64_t>(testgen::draw(rng, 0, 1000));
    return ModPoly(p, std::move(cs));
}

}  // namespace

TEST_CASE("construction reduces and trims") {
    const ModPoly f(5, {7, 10, 3, 5, 0});
    CHECK(f.coeffs() == std::vector<std::uint64_t>{2, 0, 3});
    CHECK(f.degree() == 2);
    CHECK(ModPoly(3, {3, 6, 9}).is_zero());
    CHECK_THROWS_AS(ModPoly(1, {1}), std::invalid_argument);
    CHECK_THROWS_AS(ModPoly(0, {1}), std::invalid_argument);
}

TEST_CASE("reduction of integer polynomials") {
    CHECK(reduce_mod(IntPoly{-1, 1}, 2) == ModPoly(2, {1, 1}));
    CHECK(reduce_mod(IntPoly{-7, 12, 5}, 5) == ModPoly(5, {3, 2}));
    CHECK(reduce_mod(IntPoly{}, 7).is_zero());
    CHECK_THROWS_AS(reduce_mod(IntPoly{1, 1}, 6), std::invalid_argument);
    CHECK_THROWS_AS(reduce_mod(IntPoly{1, 1}, 0), std::invalid_argument);
}

TEST_CASE("freshman's dream at the ninth cyclotomic") {
    // (x - 1)^6 and Phi_9 coincide mod 3
    const ModPoly xm1 = reduce_mod(IntPoly{-1, 1}, 3);
    CHECK(mod_pow(xm1, 6) == reduce_mod(phi(9), 3));
}

TEST_CASE("arithmetic matches integer arithmetic after reduction") {
    testgen::Rng rng(314159);
    for (std::uint64_t p : {2, 3, 97}) {
        for (int i = 0; i < 30; ++i) {
            const IntPoly a = testgen::random_poly(rng, 6, 50);
            const IntPoly b = testgen::random_poly(rng, 6, 50);
            CHECK(mod_add(reduce_mod(a, p), reduce_mod(b, p)) == reduce_mod(a + b, p));
            CHECK(mod_sub(reduce_mod(a, p), reduce_mod(b, p)) == reduce_mod(a - b, p));
            CHECK(mod_mul(reduce_mod(a, p), reduce_mod(b, p)) == reduce_mod(a * b, p));
        }
    }
}

TEST_CASE("mod_pow") {
    const ModPoly f(7, {1, 1});
    CHECK(mod_pow(f, 0) == ModPoly::one(7));
    CHECK(mod_pow(f, 1) == f);
    CHECK(mod_pow(f, 7) == ModPoly(7, {1, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(mod_pow(ModPoly::zero(5), 0) == ModPoly::one(5));
}

TEST_CASE("mod_divrem properties") {
    testgen::Rng rng(2718);
    for (std::uint64_t p : {2, 5, 101}) {
        for (int i = 0; i < 40; ++i) {
            const ModPoly f = random_modpoly(rng, p, 8);
            ModPoly g = random_modpoly(rng, p, 4);
            if (g.is_zero()) g = ModPoly(p, {1, 1});
            const auto [q, r] = mod_divrem(f, g);
            CHECK(mod_add(mod_mul(q, g), r) == f);
            CHECK((r.is_zero() || *r.degree() < *g.degree()));
        }
    }
    CHECK_THROWS_AS(mod_divrem(ModPoly(3, {1}), ModPoly::zero(3)), std::invalid_argument);
    CHECK_THROWS_AS(mod_divrem(ModPoly(3, {1}), ModPoly(5, {1, 1})), std::invalid_argument);
}

TEST_CASE("mod_gcd") {
    // gcd((x+1)^2, x^2+1) mod 2: x^2+1 = (x+1)^2, so the gcd is the square
    const ModPoly a(2, {1, 0, 1});
    const ModPoly b(2, {1, 2, 1});
    CHECK(mod_gcd(a, b) == ModPoly(2, {1, 0, 1}));

    // coprime inputs give 1
    CHECK(mod_gcd(ModPoly(5, {1, 1}), ModPoly(5, {2, 1})) == ModPoly::one(5));

    // gcd with zero is the monic normalization of the other input
    CHECK(mod_gcd(ModPoly(7, {2, 4}), ModPoly::zero(7)) == ModPoly(7, {4, 1}));

    CHECK_THROWS_AS(mod_gcd(ModPoly::zero(3), ModPoly::zero(3)), std::invalid_argument);

    // the gcd divides both inputs and is monic
    testgen::Rng rng(555);
    for (int i = 0; i < 30; ++i) {
        const ModPoly f = random_modpoly(rng, 13, 6);
        const ModPoly g = random_modpoly(rng, 13, 6);
        if (f.is_zero() && g.is_zero()) continue;
        const ModPoly d = mod_gcd(f, g);
        CHECK(d.is_monic());
        if (!f.is_zero()) CHECK(mod_divrem(f, d).second.is_zero());
        if (!g.is_zero()) CHECK(mod_divrem(g, d).second.is_zero());
    }
}

TEST_CASE("mod text rendering") {
    CHECK(to_string(ModPoly(3, {1, 0, 0, 1, 0, 0, 1})) == "x^6 + x^3 + 1 (mod 3)");
    CHECK(to_string(ModPoly::zero(2)) == "0 (mod 2)");
}
