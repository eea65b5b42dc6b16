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

#include "cyclobez/bezout.hpp"

#include <stdexcept>
#include <utility>

#include "cyclobez/check.hpp"
#include "cyclobez/cyclotomic.hpp"
#include "cyclobez/lattice.hpp"

namespace cyclobez {

namespace {

void require_distinct(std::uint64_t m, std::uint64_t n) {
    if (m == 0 || n == 0) throw std::invalid_argument("indices must be >= 1");
    if (m == n) throw std::invalid_argument("indices must differ");
}

void normalize(std::uint64_t& m, std::uint64_t& n) {
    require_distinct(m, n);
    if (m < n) std::swap(m, n);
}

bool certificate_degrees_ok(const Certificate& c) {
    const std::size_t dm = static_cast<std::size_t>(totient(c.m));
    const std::size_t dn = static_cast<std::size_t>(totient(c.n));
    const bool a_ok = c.a.is_zero() || *c.a.degree() < dn;
    const bool b_ok = c.b.is_zero() || *c.b.degree() < dm;
    return a_ok && b_ok;
}

}  // namespace

PairClass classify_pair(std::uint64_t m, std::uint64_t n) {
    normalize(m, n);
    PairClass c;
    if (m % n != 0) {
        c.kind = PairKind::neither_divides;
        return c;
    }
    c.quotient = m / n;
    if (auto pp = as_prime_power(c.quotient)) {
        c.kind = PairKind::divisor_prime_power;
        c.power = *pp;
    } else {
        c.kind = PairKind::divisor_not_prime_power;
    }
    return c;
}

std::uint64_t minimal_k(std::uint64_t m, std::uint64_t n) {
    const PairClass c = classify_pair(m, n);
    return c.kind == PairKind::divisor_prime_power ? c.power.prime : 1;
}

Certificate certificate_constructive(std::uint64_t m, std::uint64_t n) {
    require_distinct(m, n);
    if (m < n || m % n != 0) throw std::invalid_argument("certificate_constructive: n must divide m");

    const IntPoly phi_m = phi(m);
    const IntPoly phi_n = phi(n);
    const IntPoly lifted = compose_power(phi(m / n), static_cast<std::size_t>(n));

    const IntPoly big_a = exact_div(lifted, phi_m);
    const auto [q, r] = div_rem_monic(lifted, phi_n);

    const mpz_class k(minimal_k(m, n));
    internal_check(r == IntPoly::constant(k), "constructive: remainder is not the predicted constant");

    const auto [s, a] = div_rem_monic(big_a, phi_n);
    const IntPoly b = s * phi_m - q;

    Certificate c{m, n, k, a, b};
    internal_check(c.a * phi_m + c.b * phi_n == IntPoly::constant(k),
                   "constructive: certificate identity fails");
    internal_check(certificate_degrees_ok(c), "constructive: degree normalization fails");
    return c;
}

Certificate certificate_lattice(std::uint64_t m, std::uint64_t n) {
    normalize(m, n);
    MinimalConstant mc = minimal_constant(phi(m), phi(n));
    Certificate c{m, n, std::move(mc.k), std::move(mc.a), std::move(mc.b)};
    internal_check(certificate_degrees_ok(c), "lattice: degree normalization fails");
    return c;
}

Certificate certificate(std::uint64_t m, std::uint64_t n) {
    normalize(m, n);
    Certificate c = (m % n == 0) ? certificate_constructive(m, n) : certificate_lattice(m, n);
    internal_check(verify(c), "certificate fails verification");
    return c;
}

bool verify(const Certificate& c) {
    try {
        if (c.m == 0 || c.n == 0 || c.m == c.n || c.k < 1) return false;
        const IntPoly lhs = c.a * phi_inductive(c.m) + c.b * phi_inductive(c.n);
        return lhs == IntPoly::constant(c.k);
    } catch (...) {
        return false;
    }
}

std::optional<MinimalityWitness> minimality_witness(std::uint64_t m, std::uint64_t n) {
    normalize(m, n);
    const PairClass c = classify_pair(m, n);
    if (c.kind != PairKind::divisor_prime_power) return std::nullopt;

    const std::uint64_t p = c.power.prime;
    ModPoly g = mod_gcd(reduce_mod(phi(m), p), reduce_mod(phi(n), p));
    internal_check(!g.is_zero() && *g.degree() >= 1,
                   "minimality_witness: reductions are coprime for a prime-power quotient");
    return MinimalityWitness{p, std::move(g)};
}

bool charp_identity_check(std::uint64_t n, std::uint64_t p, unsigned r) {
    if (n == 0) throw std::invalid_argument("charp_identity_check: n must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("charp_identity_check: p must be prime");
    if (n % p == 0) throw std::invalid_argument("charp_identity_check: p must not divide n");
    if (r == 0) throw std::invalid_argument("charp_identity_check: r must be >= 1");

    std::uint64_t pr = 1;
    for (unsigned i = 0; i < r; ++i) {
        if (pr > factorization_bound() / p) throw std::invalid_argument("charp_identity_check: index out of bounds");
        pr *= p;
    }
    if (n > factorization_bound() / pr) throw std::invalid_argument("charp_identity_check: index out of bounds");

    const ModPoly lhs = reduce_mod(phi(n * pr), p);
    const ModPoly rhs = mod_pow(reduce_mod(phi(n), p), totient(pr));
    return lhs == rhs;
}

}  // namespace cyclobez
