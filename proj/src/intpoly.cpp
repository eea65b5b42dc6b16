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

#include "cyclobez/intpoly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace cyclobez {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(mpz_class c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(std::size_t e, mpz_class c) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.resize(e + 1);
        p.coeffs_[e] = std::move(c);
    }
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const mpz_class& IntPoly::leading_coeff() const {
    if (coeffs_.empty()) throw std::invalid_argument("leading_coeff: zero polynomial");
    return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& g) {
    if (coeffs_.size() < g.coeffs_.size()) coeffs_.resize(g.coeffs_.size());
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& g) {
    if (coeffs_.size() < g.coeffs_.size()) coeffs_.resize(g.coeffs_.size());
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    IntPoly r = f;
    r += g;
    return r;
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) {
    IntPoly r = f;
    r -= g;
    return r;
}

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return IntPoly();
    IntPoly r;
    r.coeffs_.resize(f.coeffs_.size() + g.coeffs_.size() - 1);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
            mpz_addmul(r.coeffs_[i + j].get_mpz_t(), f.coeffs_[i].get_mpz_t(),
                       g.coeffs_[j].get_mpz_t());
        }
    }
    // leading coefficients are nonzero, so no trim is needed, but stay canonical
    r.trim();
    return r;
}

std::pair<IntPoly, IntPoly> div_rem_monic(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("div_rem_monic: zero divisor");
    if (!g.is_monic()) throw std::invalid_argument("div_rem_monic: divisor must be monic");

    const std::size_t dg = *g.degree();
    std::vector<mpz_class> rem(f.coeffs().begin(), f.coeffs().end());
    if (rem.size() <= dg) return {IntPoly(), IntPoly(std::move(rem))};

    std::vector<mpz_class> quo(rem.size() - dg);
    for (std::size_t i = quo.size(); i-- > 0;) {
        mpz_class c = rem[i + dg];
        if (c == 0) continue;
        for (std::size_t j = 0; j < dg; ++j) {
            mpz_submul(rem[i + j].get_mpz_t(), c.get_mpz_t(), g.coeffs()[j].get_mpz_t());
        }
        rem[i + dg] = 0;
        quo[i] = std::move(c);
    }
    rem.resize(dg);
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
    if (f.is_zero()) return IntPoly();

    const std::size_t dg = *g.degree();
    const mpz_class& lead = g.leading_coeff();
    std::vector<mpz_class> rem(f.coeffs().begin(), f.coeffs().end());
    if (rem.size() <= dg) throw std::domain_error("exact_div: not an exact divisor");

    std::vector<mpz_class> quo(rem.size() - dg);
    for (std::size_t i = quo.size(); i-- > 0;) {
        mpz_class c = rem[i + dg];
        if (c == 0) continue;
        if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("exact_div: not an exact divisor");
        c /= lead;
        for (std::size_t j = 0; j <= dg; ++j) {
            mpz_submul(rem[i + j].get_mpz_t(), c.get_mpz_t(), g.coeffs()[j].get_mpz_t());
        }
        quo[i] = std::move(c);
    }
    for (const auto& c : rem) {
        if (c != 0) throw std::domain_error("exact_div: not an exact divisor");
    }
    return IntPoly(std::move(quo));
}

IntPoly compose_power(const IntPoly& f, std::size_t e) {
    if (e == 0) throw std::invalid_argument("compose_power: exponent must be >= 1");
    if (f.is_zero() || e == 1) return f;
    std::vector<mpz_class> out((f.coeffs().size() - 1) * e + 1);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i * e] = f.coeffs()[i];
    return IntPoly(std::move(out));
}

mpz_class eval_at(const IntPoly& f, const mpz_class& v) {
    mpz_class acc = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        acc *= v;
        acc += f.coeffs()[i];
    }
    return acc;
}

std::string to_string(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const mpz_class& c = f.coeffs()[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (s.empty()) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        mpz_class mag = abs(c);
        if (mag != 1 || i == 0) s += mag.get_str();
        if (i >= 1) {
            s += "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << to_string(f); }

}  // namespace cyclobez
