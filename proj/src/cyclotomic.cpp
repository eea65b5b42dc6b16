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

#include "cyclobez/cyclotomic.hpp"

#include <mutex>
#include <stdexcept>

#include "cyclobez/arith.hpp"

namespace cyclobez {

namespace {

IntPoly x_pow_minus_one(std::uint64_t n) {
    return IntPoly::monomial(static_cast<std::size_t>(n)) - IntPoly::one();
}

}  // namespace

IntPoly PhiCache::value(std::uint64_t n) {
    {
        std::shared_lock lock(mutex_);
        auto it = entries_.find(n);
        if (it != entries_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    return compute_locked(n);
}

std::size_t PhiCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

const IntPoly& PhiCache::compute_locked(std::uint64_t n) {
    auto it = entries_.find(n);
    if (it != entries_.end()) return it->second;

    IntPoly product = IntPoly::one();
    for (std::uint64_t d : divisors(n)) {
        if (d == n) continue;
        product = product * compute_locked(d);
    }
    IntPoly value = exact_div(x_pow_minus_one(n), product);
    return entries_.emplace(n, std::move(value)).first->second;
}

IntPoly phi_inductive(std::uint64_t n) {
    PhiCache fresh;
    return fresh.value(n);
}

IntPoly phi_radical(std::uint64_t n) {
    const Factorization f = factorize(n);
    // Phi_rad(n) by one application of the p-step identity per distinct prime.
    IntPoly base{-1, 1};  // Phi_1
    std::uint64_t rad = 1;
    for (const auto& pp : f.factors) {
        base = exact_div(compose_power(base, pp.prime), base);
        rad *= pp.prime;
    }
    return compose_power(base, n / rad);
}

IntPoly phi_moebius(std::uint64_t n) {
    const std::vector<std::uint64_t> ds = divisors(n);
    IntPoly result = IntPoly::one();
    for (std::uint64_t d : ds) {
        if (moebius(n / d) == 1) result = result * x_pow_minus_one(d);
    }
    for (std::uint64_t d : ds) {
        if (moebius(n / d) == -1) result = exact_div(result, x_pow_minus_one(d));
    }
    return result;
}

IntPoly phi(std::uint64_t n) {
    static PhiCache cache;
    return cache.value(n);
}

std::uint64_t phi_at_one(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("phi_at_one: n must be >= 1");
    if (n == 1) return 0;  // Phi_1(1) = 0, outside the p-power dichotomy
    if (auto pp = as_prime_power(n)) return pp->prime;
    return 1;
}

}  // namespace cyclobez
