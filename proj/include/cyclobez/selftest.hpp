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

#ifndef CYCLOBEZ_SELFTEST_HPP
#define CYCLOBEZ_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cyclobez::selftest {

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
    bool passed() const { return failures == 0; }
};

/// Each suite sweeps one family of identities up to the given bound and
/// reports how many checks ran and how many failed. Bounds below a
/// suite's smallest instance yield an empty (vacuously passing) sweep.

/// prod_{d | n} Phi_d = x^n - 1 for all n <= max.
SuiteResult suite_product_identity(std::uint64_t max);

/// The three constructors agree for all n <= max; degree and leading
/// coefficient match the closed forms.
SuiteResult suite_constructor_agreement(std::uint64_t max);

/// Closed-form minimal k equals the lattice oracle's k on every pair
/// 1 <= n < m <= max; k is symmetric in the pair.
SuiteResult suite_theorem_vs_oracle(std::uint64_t max);

/// Every dispatched certificate for 1 <= n < m <= max verifies and is
/// degree-normalized; both construction paths give the same k.
SuiteResult suite_certificate_validity(std::uint64_t max);

/// Hand-derived certificates for (6,3), (9,3), (12,2), (2,1), restricted
/// to pairs with m <= max.
SuiteResult suite_spot_certificates(std::uint64_t max);

/// Phi_{pn}(x) * Phi_n(x) = Phi_n(x^p) for p prime, p not dividing n,
/// p*n <= max.
SuiteResult suite_note_identity_i(std::uint64_t max);

/// Phi_n(x) = Phi_rad(n)(x^{n/rad(n)}) for all n <= max.
SuiteResult suite_note_identity_ii(std::uint64_t max);

/// charp_identity_check holds for all (n, p, r) with p prime, p not
/// dividing n, r >= 1, n*p^r <= max.
SuiteResult suite_charp_identities(std::uint64_t max);

/// minimality_witness is present exactly on prime-power pairs with
/// m <= max, and its gcd equals Phi_n mod p.
SuiteResult suite_minimality_witnesses(std::uint64_t max);

/// phi_at_one(n) = phi(n) evaluated at 1 for all n <= max, with the
/// closed-form trichotomy.
SuiteResult suite_phi_at_one(std::uint64_t max);

/// The coefficient of x^7 in Phi_105 is -2, by two constructors.
/// Empty sweep when max < 105.
SuiteResult suite_coefficient_landmark(std::uint64_t max);

/// Documented rejections actually reject: bad indices, non-monic
/// division, inexact division, common factors, composite moduli.
SuiteResult suite_error_contracts();

/// All suites in a fixed order, sharing the one bound.
std::vector<SuiteResult> run_all(std::uint64_t max);

}  // namespace cyclobez::selftest

#endif
