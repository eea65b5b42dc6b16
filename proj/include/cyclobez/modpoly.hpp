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

#ifndef CYCLOBEZ_MODPOLY_HPP
#define CYCLOBEZ_MODPOLY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclobez/intpoly.hpp"

namespace cyclobez {

/// Dense univariate polynomial over Z/p for a word-size prime p.
/// Coefficients ascending, reduced into [0, p), canonical (no trailing
/// zeros; the zero polynomial is the empty vector).
class ModPoly {
   public:
    /// Canonicalizes: reduces every coefficient mod p and trims.
    ModPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);

    static ModPoly zero(std::uint64_t modulus) { return ModPoly(modulus, {}); }
    static ModPoly one(std::uint64_t modulus) { return ModPoly(modulus, {1}); }

    std::uint64_t modulus() const { return modulus_; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    bool operator==(const ModPoly&) const = default;

   private:
    std::uint64_t modulus_;
    std::vector<std::uint64_t> coeffs_;
};

/// Coefficient-wise reduction of an integer polynomial into (Z/p)[x].
/// The modulus must be prime (the gcd below runs over a field);
/// a composite modulus throws std::invalid_argument.
ModPoly reduce_mod(const IntPoly& f, std::uint64_t p);

ModPoly mod_add(const ModPoly& f, const ModPoly& g);
ModPoly mod_sub(const ModPoly& f, const ModPoly& g);
ModPoly mod_mul(const ModPoly& f, const ModPoly& g);

/// Binary exponentiation; f^0 = 1.
ModPoly mod_pow(const ModPoly& f, std::uint64_t e);

/// f = q*g + r over Z/p with degree(r) < degree(g).
std::pair<ModPoly, ModPoly> mod_divrem(const ModPoly& f, const ModPoly& g);

/// Monic gcd via the Euclidean algorithm. Inputs must share a modulus
/// and must not both be zero.
ModPoly mod_gcd(const ModPoly& f, const ModPoly& g);

std::string to_string(const ModPoly& f);
std::ostream& operator<<(std::ostream& os, const ModPoly& f);

}  // namespace cyclobez

#endif
