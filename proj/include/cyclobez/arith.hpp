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

#ifndef CYCLOBEZ_ARITH_HPP
#define CYCLOBEZ_ARITH_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace cyclobez {

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

/// Complete factorization, primes strictly ascending. Empty for n = 1.
struct Factorization {
    std::vector<PrimePower> factors;
    bool operator==(const Factorization&) const = default;
};

/// Largest index accepted by factorize() and everything built on it.
/// Defaults to 10^6; override with the CYCLOBEZ_MAX_INDEX environment
/// variable. The bound keeps trial division (and polynomial degrees)
/// at desk scale instead of hanging on absurd input.
std::uint64_t factorization_bound();

/// Trial-division factorization. Throws std::invalid_argument for n = 0
/// or n above factorization_bound().
Factorization factorize(std::uint64_t n);

/// All divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Moebius function: 0 on non-squarefree n, else (-1)^(#prime factors).
int moebius(std::uint64_t n);

/// Euler totient.
std::uint64_t totient(std::uint64_t n);

/// Product of the distinct primes dividing n; radical(1) = 1.
std::uint64_t radical(std::uint64_t n);

/// (p, t) with n = p^t, t >= 1; empty for n = 1 and for n with more
/// than one distinct prime factor.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

bool is_prime(std::uint64_t n);

}  // namespace cyclobez

#endif
