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

#ifndef CYCLOBEZ_TESTS_TESTGEN_HPP
#define CYCLOBEZ_TESTS_TESTGEN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "cyclobez/intpoly.hpp"

namespace testgen {

using Rng = std::mt19937_64;

/// Integer in [lo, hi] drawn by modulo reduction. Used instead of
/// uniform_int_distribution so the stream is identical on every
/// standard library; the slight bias is irrelevant here.
inline long draw(Rng& rng, long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng() % span);
}

/// Polynomial of degree at most max_degree (possibly zero) with
/// coefficients in [-coeff_bound, coeff_bound].
inline cyclobez::IntPoly random_poly(Rng& rng, std::size_t max_degree, long coeff_bound) {
    const long len = draw(rng, 0, static_cast<long>(max_degree) + 1);
    std::vector<mpz_class> cs(static_cast<std::size_t>(len));
    for (auto& c : cs) c = draw(rng, -coeff_bound, coeff_bound);
    return cyclobez::IntPoly(std::move(cs));
}

/// Monic polynomial of exactly the requested degree.
inline cyclobez::IntPoly random_monic(Rng& rng, std::size_t degree, long coeff_bound) {
    std::vector<mpz_class> cs(degree + 1);
    for (std::size_t i = 0; i < degree; ++i) cs[i] = draw(rng, -coeff_bound, coeff_bound);
    cs[degree] = 1;
    return cyclobez::IntPoly(std::move(cs));
}

}  // namespace testgen

#endif
