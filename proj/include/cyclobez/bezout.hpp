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

#ifndef CYCLOBEZ_BEZOUT_HPP
#define CYCLOBEZ_BEZOUT_HPP

#include <cstdint>
#include <optional>

#include "cyclobez/arith.hpp"
#include "cyclobez/intpoly.hpp"
#include "cyclobez/modpoly.hpp"

namespace cyclobez {

enum class PairKind {
    neither_divides,
    divisor_not_prime_power,
    divisor_prime_power,
};

/// Trichotomy of an unordered pair of distinct indices {m, n}, stated
/// for the normalized order m > n. `quotient` is m/n for both divisor
/// kinds; `power` carries (p, t) with m/n = p^t for the prime-power kind.
struct PairClass {
    PairKind kind = PairKind::neither_divides;
    std::uint64_t quotient = 0;
    PrimePower power;
    bool operator==(const PairClass&) const = default;
};

/// Bezout certificate for the pair of cyclotomic polynomials with
/// indices m > n: the identity a*Phi_m + b*Phi_n = k together with the
/// normalization degree(a) < degree(Phi_n), degree(b) < degree(Phi_m).
struct Certificate {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    mpz_class k;
    IntPoly a;
    IntPoly b;
    bool operator==(const Certificate&) const = default;
};

/// Classifies the pair after normalizing so m > n. Throws
/// std::invalid_argument for m = n or an index of 0.
PairClass classify_pair(std::uint64_t m, std::uint64_t n);

/// The minimal positive constant representable as a*Phi_m + b*Phi_n
/// over Z[x]: 1 unless the larger index over the smaller is a prime
/// power p^t, in which case p. Symmetric in the pair.
std::uint64_t minimal_k(std::uint64_t m, std::uint64_t n);

/// Certificate for a divisor pair (n | m, m > n), built by the division
/// route: A = Phi_{m/n}(x^n) / Phi_m, then division of Phi_{m/n}(x^n)
/// by Phi_n leaves the constant remainder k. The returned a is A
/// reduced modulo Phi_n with the quotient absorbed into b. A failed
/// internal step (non-exact division, non-constant or wrong remainder)
/// throws InternalError.
Certificate certificate_constructive(std::uint64_t m, std::uint64_t n);

/// Certificate for any pair of distinct indices via the integer-lattice
/// oracle (minimal_constant on the two polynomials). Order-normalized.
Certificate certificate_lattice(std::uint64_t m, std::uint64_t n);

/// Dispatch: divisor pairs take the constructive route, the rest the
/// lattice route. Every certificate is re-verified before return.
Certificate certificate(std::uint64_t m, std::uint64_t n);

/// True iff a*Phi_m + b*Phi_n equals the constant polynomial k with
/// k >= 1, the polynomials recomputed from scratch with the reference
/// constructor. Never throws; malformed certificates report false.
bool verify(const Certificate& c);

/// Witness that no constant 0 < c < k works for a prime-power pair:
/// the reductions of Phi_m and Phi_n modulo p share a nonconstant
/// factor, so any integer combination vanishes at a common root.
struct MinimalityWitness {
    std::uint64_t p = 0;
    ModPoly gcd;
    bool operator==(const MinimalityWitness&) const = default;
};

/// Present exactly when the normalized quotient m/n is a prime power
/// p^t; then gcd = mod_gcd(Phi_m mod p, Phi_n mod p) with degree >= 1.
/// A constant gcd in that case throws InternalError.
std::optional<MinimalityWitness> minimality_witness(std::uint64_t m, std::uint64_t n);

/// Checks the characteristic-p collapse: for p prime with p not
/// dividing n and r >= 1, Phi_{n*p^r} mod p equals (Phi_n mod p)
/// raised to totient(p^r). Throws std::invalid_argument when p | n,
/// p is not prime, r = 0, or n*p^r exceeds the factorization bound.
bool charp_identity_check(std::uint64_t n, std::uint64_t p, unsigned r);

}  // namespace cyclobez

#endif
