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

#ifndef CYCLOBEZ_CYCLOTOMIC_HPP
#define CYCLOBEZ_CYCLOTOMIC_HPP

#include <cstdint>
#include <map>
#include <shared_mutex>

#include "cyclobez/intpoly.hpp"

namespace cyclobez {

/// Memo table for the inductive construction. Entries are immutable once
/// inserted and always equal what a fresh computation would produce.
/// Concurrent readers are safe; a writer never exposes a partial value.
class PhiCache {
   public:
    PhiCache() = default;
    PhiCache(const PhiCache&) = delete;
    PhiCache& operator=(const PhiCache&) = delete;

    /// Phi_n, computing and memoizing it (and its divisors) on a miss.
    IntPoly value(std::uint64_t n);

    std::size_t size() const;

   private:
    const IntPoly& compute_locked(std::uint64_t n);

    mutable std::shared_mutex mutex_;
    std::map<std::uint64_t, IntPoly> entries_;
};

/// The n-th cyclotomic polynomial from the defining recursion
/// x^n - 1 = prod_{d | n} Phi_d(x): divide x^n - 1 by the product of the
/// proper-divisor polynomials. Fresh computation, no shared state.
IntPoly phi_inductive(std::uint64_t n);

/// Phi_n through the radical: build Phi_rad(n) from Phi_1 one prime at a
/// time via Phi_{pm}(x) = Phi_m(x^p) / Phi_m(x), then substitute
/// x^(n/rad(n)). Independent of phi_inductive.
IntPoly phi_radical(std::uint64_t n);

/// Phi_n as the Moebius product prod_{d | n} (x^d - 1)^{mu(n/d)}:
/// multiply the mu = +1 factors, then divide out each mu = -1 factor.
/// Independent cross-check of the other two constructors.
IntPoly phi_moebius(std::uint64_t n);

/// Memoized facade over the inductive construction (process-wide cache).
IntPoly phi(std::uint64_t n);

/// Phi_n(1) in closed form: 0 for n = 1, p for n a prime power p^t,
/// 1 otherwise.
std::uint64_t phi_at_one(std::uint64_t n);

}  // namespace cyclobez

#endif
