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

#include "cyclobez/modpoly.hpp"

#include <ostream>
#include <stdexcept>

#include "cyclobez/arith.hpp"

namespace cyclobez {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Fermat inverse; p prime, a not divisible by p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a % p, p - 2, p); }

void require_same_modulus(const ModPoly& f, const ModPoly& g) {
    if (f.modulus() != g.modulus()) throw std::invalid_argument("modulus mismatch");
}

ModPoly from_reduced(std::uint64_t p, std::vector<std::uint64_t> coeffs) {
    // coefficients already in [0, p); the constructor only trims
    return ModPoly(p, std::move(coeffs));
}

}  // namespace

ModPoly::ModPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
    if (modulus_ < 2) throw std::invalid_argument("ModPoly: modulus must be >= 2");
    for (auto& c : coeffs_) c %= modulus_;
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ModPoly reduce_mod(const IntPoly& f, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("reduce_mod: modulus must be prime");
    std::vector<std::uint64_t> out;
    out.reserve(f.coeffs().size());
    for (const mpz_class& c : f.coeffs()) {
        // floor remainder: lands in [0, p) for negative coefficients too
        out.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    }
    return ModPoly(p, std::move(out));
}

ModPoly mod_add(const ModPoly& f, const ModPoly& g) {
    require_same_modulus(f, g);
    const std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> out(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t a = i < f.coeffs().size() ? f.coeffs()[i] : 0;
        std::uint64_t b = i < g.coeffs().size() ? g.coeffs()[i] : 0;
        std::uint64_t s = a + b;
        out[i] = s >= p ? s - p : s;
    }
    return from_reduced(p, std::move(out));
}

ModPoly mod_sub(const ModPoly& f, const ModPoly& g) {
    require_same_modulus(f, g);
    const std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> out(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t a = i < f.coeffs().size() ? f.coeffs()[i] : 0;
        std::uint64_t b = i < g.coeffs().size() ? g.coeffs()[i] : 0;
        out[i] = a >= b ? a - b : a + p - b;
    }
    return from_reduced(p, std::move(out));
}

ModPoly mod_mul(const ModPoly& f, const ModPoly& g) {
    require_same_modulus(f, g);
    const std::uint64_t p = f.modulus();
    if (f.is_zero() || g.is_zero()) return ModPoly::zero(p);
    std::vector<std::uint64_t> out(f.coeffs().size() + g.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
            std::uint64_t t = out[i + j] + mul_mod(f.coeffs()[i], g.coeffs()[j], p);
            out[i + j] = t >= p ? t - p : t;
        }
    }
    return from_reduced(p, std::move(out));
}

ModPoly mod_pow(const ModPoly& f, std::uint64_t e) {
    ModPoly result = ModPoly::one(f.modulus());
    ModPoly base = f;
    while (e > 0) {
        if (e & 1) result = mod_mul(result, base);
        base = mod_mul(base, base);
        e >>= 1;
    }
    return result;
}

std::pair<ModPoly, ModPoly> mod_divrem(const ModPoly& f, const ModPoly& g) {
    require_same_modulus(f, g);
    if (g.is_zero()) throw std::invalid_argument("mod_divrem: zero divisor");
    const std::uint64_t p = f.modulus();
    const std::size_t dg = *g.degree();
    std::vector<std::uint64_t> rem = f.coeffs();
    if (rem.size() <= dg) return {ModPoly::zero(p), f};

    const std::uint64_t lead_inv = inv_mod(g.coeffs().back(), p);
    std::vector<std::uint64_t> quo(rem.size() - dg, 0);
    for (std::size_t i = quo.size(); i-- > 0;) {
        std::uint64_t c = mul_mod(rem[i + dg], lead_inv, p);
        if (c == 0) continue;
        quo[i] = c;
        for (std::size_t j = 0; j <= dg; ++j) {
            std::uint64_t t = mul_mod(c, g.coeffs()[j], p);
            std::uint64_t& r = rem[i + j];
            r = r >= t ? r - t : r + p - t;
        }
    }
    rem.resize(dg);
    return {from_reduced(p, std::move(quo)), from_reduced(p, std::move(rem))};
}

ModPoly mod_gcd(const ModPoly& f, const ModPoly& g) {
    require_same_modulus(f, g);
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("mod_gcd: both inputs zero");
    const std::uint64_t p = f.modulus();
    ModPoly a = f, b = g;
    while (!b.is_zero()) {
        ModPoly r = mod_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    // normalize monic so equality assertions are deterministic
    const std::uint64_t scale = inv_mod(a.coeffs().back(), p);
    std::vector<std::uint64_t> out = a.coeffs();
    for (auto& c : out) c = mul_mod(c, scale, p);
    return from_reduced(p, std::move(out));
}

std::string to_string(const ModPoly& f) {
    if (f.is_zero()) return "0 (mod " + std::to_string(f.modulus()) + ")";
    std::string s;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const std::uint64_t c = f.coeffs()[i];
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        if (c != 1 || i == 0) s += std::to_string(c);
        if (i >= 1) {
            s += "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s + " (mod " + std::to_string(f.modulus()) + ")";
}

std::ostream& operator<<(std::ostream& os, const ModPoly& f) { return os << to_string(f); }

}  // namespace cyclobez
