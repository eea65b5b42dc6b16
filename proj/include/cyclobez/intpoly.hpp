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

#ifndef CYCLOBEZ_INTPOLY_HPP
#define CYCLOBEZ_INTPOLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyclobez {

/// Dense univariate polynomial over arbitrary-precision integers.
///
/// Coefficients are stored ascending by degree (coeffs()[i] is the
/// coefficient of x^i). The representation is canonical: the zero
/// polynomial is the empty vector, and a nonzero polynomial never carries
/// a trailing zero coefficient. Every operation returns canonical values.
///
/// The degree of the zero polynomial is not a number; degree() returns
/// an empty optional for it rather than overloading -1.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly{1}; }
    static IntPoly constant(mpz_class c);
    /// c * x^e
    static IntPoly monomial(std::size_t e, mpz_class c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i; zero beyond the stored length.
    const mpz_class& coeff(std::size_t i) const;
    const mpz_class& leading_coeff() const;  // throws on the zero polynomial

    bool operator==(const IntPoly&) const = default;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& g);
    IntPoly& operator-=(const IntPoly& g);

    friend IntPoly operator+(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator-(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator*(const IntPoly& f, const IntPoly& g);

   private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// Division with remainder by a monic divisor: f = q*g + r with
/// degree(r) < degree(g). The monic restriction keeps q and r in Z[x];
/// a non-monic or zero divisor throws std::invalid_argument.
std::pair<IntPoly, IntPoly> div_rem_monic(const IntPoly& f, const IntPoly& g);

/// Exact quotient f / g over the integers. Throws std::domain_error
/// ("not an exact divisor") if g does not divide f, std::invalid_argument
/// if g is zero.
IntPoly exact_div(const IntPoly& f, const IntPoly& g);

/// f(x^e) for e >= 1; throws std::invalid_argument on e = 0.
IntPoly compose_power(const IntPoly& f, std::size_t e);

/// Exact Horner evaluation.
mpz_class eval_at(const IntPoly& f, const mpz_class& v);

/// Human-readable rendering, descending degree: "x^4 - x^2 + 1".
std::string to_string(const IntPoly& f);
std::ostream& operator<<(std::ostream& os, const IntPoly& f);

}  // namespace cyclobez

#endif
