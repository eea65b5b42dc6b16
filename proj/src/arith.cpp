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

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cyclobez {

std::uint64_t factorization_bound() {
    const char* raw = std::getenv("CYCLOBEZ_MAX_INDEX");
    if (raw == nullptr || *raw == '\0') return 1'000'000;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0)
        throw std::invalid_argument("CYCLOBEZ_MAX_INDEX must be a positive integer");
    return v;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    if (n > factorization_bound())
        throw std::invalid_argument("factorize: n exceeds configured bound (" +
                                    std::to_string(factorization_bound()) + ")");
    Factorization out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    }
    if (n > 1) out.factors.push_back({n, 1});
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    const Factorization f = factorize(n);
    std::vector<std::uint64_t> ds{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = ds.size();
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

int moebius(std::uint64_t n) {
    const Factorization f = factorize(n);
    for (const auto& pp : f.factors) {
        if (pp.exponent > 1) return 0;
    }
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t totient(std::uint64_t n) {
    std::uint64_t t = n;
    for (const auto& pp : factorize(n).factors) {
        t -= t / pp.prime;
    }
    return t;
}

std::uint64_t radical(std::uint64_t n) {
    std::uint64_t r = 1;
    for (const auto& pp : factorize(n).factors) r *= pp.prime;
    return r;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
    const Factorization f = factorize(n);
    if (f.factors.size() != 1) return std::nullopt;
    return f.factors.front();
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace cyclobez
