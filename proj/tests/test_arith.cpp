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

#include "cyclobez/arith.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "doctest.h"

using namespace cyclobez;

TEST_CASE("factorize") {
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(2) == Factorization{{{2, 1}}});
    CHECK(factorize(360) == Factorization{{{2, 3}, {3, 2}, {5, 1}}});
    CHECK(factorize(999983) == Factorization{{{999983, 1}}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK_THROWS_AS(factorize(1000001), std::invalid_argument);
}

TEST_CASE("factorization bound honors the environment") {
    CHECK(factorization_bound() == 1000000);

    setenv("CYCLOBEZ_MAX_INDEX", "50", 1);
    CHECK(factorization_bound() == 50);
    CHECK_THROWS_AS(factorize(51), std::invalid_argument);
    CHECK(factorize(50).factors.size() == 2);

    setenv("CYCLOBEZ_MAX_INDEX", "not-a-number", 1);
    CHECK_THROWS_AS(factorization_bound(), std::invalid_argument);
    setenv("CYCLOBEZ_MAX_INDEX", "0", 1);
    CHECK_THROWS_AS(factorization_bound(), std::invalid_argument);

    unsetenv("CYCLOBEZ_MAX_INDEX");
    CHECK(factorization_bound() == 1000000);
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(49) == std::vector<std::uint64_t>{1, 7, 49});
    for (std::uint64_t n = 1; n <= 300; ++n) {
        const auto ds = divisors(n);
        for (std::uint64_t d : ds) CHECK(n % d == 0);
        std::uint64_t brute = 0;
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) ++brute;
        CHECK(ds.size() == brute);
    }
}

TEST_CASE("moebius") {
    const int expected[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1, 0};
    for (std::uint64_t n = 1; n <= 16; ++n) CHECK(moebius(n) == expected[n - 1]);

    // sum over divisors is the unit-detecting identity
    for (std::uint64_t n = 2; n <= 200; ++n) {
        int sum = 0;
        for (std::uint64_t d : divisors(n)) sum += moebius(d);
        CHECK(sum == 0);
    }
}

TEST_CASE("totient") {
    CHECK(totient(1) == 1);
    CHECK(totient(2) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(105) == 48);
    CHECK(totient(999983) == 999982);

    for (std::uint64_t n = 1; n <= 200; ++n) {
        std::uint64_t sum = 0;
        for (std::uint64_t d : divisors(n)) sum += totient(d);
        CHECK(sum == n);
    }
}

TEST_CASE("radical") {
    CHECK(radical(1) == 1);
    CHECK(radical(12) == 6);
    CHECK(radical(49) == 7);
    CHECK(radical(360) == 30);
    for (std::uint64_t n = 1; n <= 100; ++n) {
        CHECK(n % radical(n) == 0);
        CHECK(moebius(radical(n)) != 0);
    }
}

TEST_CASE("as_prime_power") {
    CHECK_FALSE(as_prime_power(1).has_value());
    CHECK(as_prime_power(2) == PrimePower{2, 1});
    CHECK(as_prime_power(27) == PrimePower{3, 3});
    CHECK(as_prime_power(1024) == PrimePower{2, 10});
    CHECK_FALSE(as_prime_power(6).has_value());
    CHECK_FALSE(as_prime_power(12).has_value());
}

TEST_CASE("is_prime agrees with factorize") {
    for (std::uint64_t n = 0; n <= 1000; ++n) {
        const bool expected =
            n >= 2 && factorize(n).factors.size() == 1 && factorize(n).factors[0].exponent == 1;
        CHECK(is_prime(n) == expected);
    }
}
