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

#include "cyclobez/selftest.hpp"

#include <stdexcept>
#include <utility>

#include "cyclobez/arith.hpp"
#include "cyclobez/bezout.hpp"
#include "cyclobez/cyclotomic.hpp"
#include "cyclobez/lattice.hpp"
#include "cyclobez/modpoly.hpp"

namespace cyclobez::selftest {

namespace {

class Suite {
   public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void pass() { ++result_.checks; }

    void fail(std::string what) {
        ++result_.checks;
        ++result_.failures;
        if (result_.first_failure.empty()) result_.first_failure = std::move(what);
    }

    void check(bool ok, const char* what) {
        if (ok)
            pass();
        else
            fail(what);
    }

    template <typename Exception, typename Fn>
    void check_throws(Fn&& fn, const char* what) {
        try {
            fn();
        } catch (const Exception&) {
            pass();
            return;
        } catch (...) {
        }
        fail(what);
    }

    SuiteResult take() { return std::move(result_); }

   private:
    SuiteResult result_;
};

std::string pair_tag(std::uint64_t m, std::uint64_t n) {
    return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t max) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p <= max; ++p)
        if (is_prime(p)) ps.push_back(p);
    return ps;
}

}  // namespace

SuiteResult suite_product_identity(std::uint64_t max) {
    Suite s("product-identity");
    for (std::uint64_t n = 1; n <= max; ++n) {
        IntPoly prod = IntPoly::one();
        for (std::uint64_t d : divisors(n)) prod = prod * phi(d);
        const IntPoly target = IntPoly::monomial(static_cast<std::size_t>(n)) - IntPoly::one();
        if (prod == target)
            s.pass();
        else
            s.fail("divisor product mismatch at n=" + std::to_string(n));
    }
    return s.take();
}

SuiteResult suite_constructor_agreement(std::uint64_t max) {
    Suite s("constructor-agreement");
    for (std::uint64_t n = 1; n <= max; ++n) {
        const IntPoly ind = phi(n);
        const bool ok = ind == phi_moebius(n) && ind == phi_radical(n) && ind.is_monic() &&
                        ind.degree() == std::optional<std::size_t>(totient(n));
        if (ok)
            s.pass();
        else
            s.fail("constructor disagreement at n=" + std::to_string(n));
    }
    return s.take();
}

SuiteResult suite_theorem_vs_oracle(std::uint64_t max) {
    Suite s("theorem-vs-oracle");
    for (std::uint64_t m = 2; m <= max; ++m) {
        for (std::uint64_t n = 1; n < m; ++n) {
            const std::uint64_t predicted = minimal_k(m, n);
            const Certificate oracle = certificate_lattice(m, n);
            const bool ok = oracle.k == predicted && minimal_k(n, m) == predicted;
            if (ok)
                s.pass();
            else
                s.fail("oracle k disagrees with theorem at " + pair_tag(m, n));
        }
    }
    return s.take();
}

SuiteResult suite_certificate_validity(std::uint64_t max) {
    Suite s("certificate-validity");
    for (std::uint64_t m = 2; m <= max; ++m) {
        for (std::uint64_t n = 1; n < m; ++n) {
            const Certificate c = certificate(m, n);
            const std::size_t deg_m = static_cast<std::size_t>(totient(m));
            const std::size_t deg_n = static_cast<std::size_t>(totient(n));
            bool ok = verify(c);
            ok = ok && (c.a.is_zero() || *c.a.degree() < deg_n);
            ok = ok && (c.b.is_zero() || *c.b.degree() < deg_m);
            if (m % n == 0) ok = ok && certificate_lattice(m, n).k == c.k;
            if (ok)
                s.pass();
            else
                s.fail("certificate invalid at " + pair_tag(m, n));
        }
    }
    return s.take();
}

SuiteResult suite_spot_certificates(std::uint64_t max) {
    Suite s("spot-certificates");

    if (max >= 6) {
        const Certificate c = certificate(6, 3);
        s.check(c.k == 2 && c.a == IntPoly{1, 1} && c.b == IntPoly{1, -1}, "(6,3) certificate");
        const IntPoly identity = IntPoly{1, 1} * phi(6) - IntPoly{-1, 1} * phi(3);
        s.check(identity == IntPoly::constant(2), "(x+1)Phi_6 - (x-1)Phi_3 = 2");
    }
    if (max >= 9) {
        const Certificate c = certificate(9, 3);
        s.check(c.k == 3 && verify(c), "(9,3) certificate");
    }
    if (max >= 12) {
        const Certificate c = certificate(12, 2);
        s.check(c.k == 1 && c.a == IntPoly::one() && c.b == IntPoly{0, 0, 1, -1},
                "(12,2) certificate");
        const IntPoly identity = phi(12) - IntPoly{0, 0, -1, 1} * phi(2);
        s.check(identity == IntPoly::one(), "Phi_12 - (x^3-x^2)Phi_2 = 1");
    }
    if (max >= 2) {
        const Certificate c = certificate(2, 1);
        s.check(c.k == 2 && verify(c), "(2,1) certificate");
    }
    return s.take();
}

SuiteResult suite_note_identity_i(std::uint64_t max) {
    Suite s("note-identity-i");
    for (std::uint64_t p : primes_up_to(max)) {
        for (std::uint64_t n = 1; n * p <= max; ++n) {
            if (n % p == 0) continue;
            const bool ok = phi(p * n) * phi(n) == compose_power(phi(n), static_cast<std::size_t>(p));
            if (ok)
                s.pass();
            else
                s.fail("identity i fails at p=" + std::to_string(p) + " n=" + std::to_string(n));
        }
    }
    return s.take();
}

SuiteResult suite_note_identity_ii(std::uint64_t max) {
    Suite s("note-identity-ii");
    for (std::uint64_t n = 1; n <= max; ++n) {
        const std::uint64_t r = radical(n);
        const bool ok = phi(n) == compose_power(phi(r), static_cast<std::size_t>(n / r));
        if (ok)
            s.pass();
        else
            s.fail("identity ii fails at n=" + std::to_string(n));
    }
    return s.take();
}

SuiteResult suite_charp_identities(std::uint64_t max) {
    Suite s("charp-identities");
    for (std::uint64_t p : primes_up_to(max)) {
        std::uint64_t pr = p;
        for (unsigned r = 1; pr <= max; ++r, pr *= p) {
            for (std::uint64_t n = 1; n * pr <= max; ++n) {
                if (n % p == 0) continue;
                if (charp_identity_check(n, p, r))
                    s.pass();
                else
                    s.fail("collapse fails at n=" + std::to_string(n) + " p=" + std::to_string(p) +
                           " r=" + std::to_string(r));
            }
        }
    }
    return s.take();
}

SuiteResult suite_minimality_witnesses(std::uint64_t max) {
    Suite s("minimality-witnesses");
    for (std::uint64_t m = 2; m <= max; ++m) {
        for (std::uint64_t n = 1; n < m; ++n) {
            const PairClass cls = classify_pair(m, n);
            const auto w = minimality_witness(m, n);
            bool ok;
            if (cls.kind == PairKind::divisor_prime_power) {
                ok = w.has_value() && w->p == cls.power.prime && !w->gcd.is_zero() &&
                     *w->gcd.degree() >= 1 && w->gcd == reduce_mod(phi(n), w->p);
            } else {
                ok = !w.has_value();
            }
            if (ok)
                s.pass();
            else
                s.fail("witness contract fails at " + pair_tag(m, n));
        }
    }
    return s.take();
}

SuiteResult suite_phi_at_one(std::uint64_t max) {
    Suite s("phi-at-one");
    for (std::uint64_t n = 1; n <= max; ++n) {
        const std::uint64_t closed = phi_at_one(n);
        std::uint64_t expected = 1;
        if (n == 1)
            expected = 0;
        else if (auto pp = as_prime_power(n))
            expected = pp->prime;
        const bool ok = closed == expected && eval_at(phi(n), 1) == closed;
        if (ok)
            s.pass();
        else
            s.fail("evaluation rule fails at n=" + std::to_string(n));
    }
    return s.take();
}

SuiteResult suite_coefficient_landmark(std::uint64_t max) {
    Suite s("coefficient-landmark");
    if (max < 105) return s.take();
    const IntPoly a = phi_moebius(105);
    const IntPoly b = phi_inductive(105);
    s.check(a == b, "constructors disagree at n=105");
    s.check(a.coeff(7) == -2, "coefficient of x^7 in Phi_105 is not -2");
    return s.take();
}

SuiteResult suite_error_contracts() {
    Suite s("error-contracts");

    s.check_throws<std::invalid_argument>([] { classify_pair(5, 5); }, "m = n accepted");
    s.check_throws<std::invalid_argument>([] { classify_pair(0, 3); }, "zero index accepted");
    s.check_throws<std::invalid_argument>([] { minimal_k(7, 7); }, "minimal_k(7,7) accepted");
    s.check_throws<std::invalid_argument>([] { certificate(9, 9); }, "certificate(9,9) accepted");
    s.check_throws<std::invalid_argument>([] { certificate_constructive(6, 4); },
                                          "constructive on a non-divisor pair accepted");
    s.check_throws<std::invalid_argument>([] { phi(0); }, "phi(0) accepted");
    s.check_throws<std::invalid_argument>([] { factorize(0); }, "factorize(0) accepted");
    if (factorization_bound() < ~std::uint64_t{0})
        s.check_throws<std::invalid_argument>([] { factorize(factorization_bound() + 1); },
                                              "over-bound factorize accepted");
    s.check_throws<std::domain_error>([] { exact_div(IntPoly{1, 0, 1}, IntPoly{1, 1}); },
                                      "inexact division accepted");
    s.check_throws<std::invalid_argument>([] { div_rem_monic(IntPoly{1, 1}, IntPoly{1, 2}); },
                                          "non-monic divisor accepted");
    s.check_throws<std::domain_error>([] { minimal_constant(IntPoly{-1, 0, 1}, IntPoly{1, 1}); },
                                      "common factor accepted");
    s.check_throws<std::invalid_argument>([] { charp_identity_check(2, 2, 1); },
                                          "p | n accepted");
    s.check_throws<std::invalid_argument>([] { charp_identity_check(3, 4, 1); },
                                          "composite p accepted");
    s.check_throws<std::invalid_argument>([] { reduce_mod(IntPoly{1, 1}, 6); },
                                          "composite modulus accepted");

    s.check(!verify(Certificate{}), "default certificate verifies");
    s.check(!verify(Certificate{6, 3, 1, IntPoly::zero(), IntPoly::zero()}),
            "zero certificate verifies");
    {
        Certificate tampered = certificate(6, 3);
        tampered.k = 3;
        s.check(!verify(tampered), "tampered certificate verifies");
    }
    return s.take();
}

std::vector<SuiteResult> run_all(std::uint64_t max) {
    std::vector<SuiteResult> results;
    results.push_back(suite_product_identity(max));
    results.push_back(suite_constructor_agreement(max));
    results.push_back(suite_theorem_vs_oracle(max));
    results.push_back(suite_certificate_validity(max));
    results.push_back(suite_spot_certificates(max));
    results.push_back(suite_note_identity_i(max));
    results.push_back(suite_note_identity_ii(max));
    results.push_back(suite_charp_identities(max));
    results.push_back(suite_minimality_witnesses(max));
    results.push_back(suite_phi_at_one(max));
    results.push_back(suite_coefficient_landmark(max));
    results.push_back(suite_error_contracts());
    return results;
}

}  // namespace cyclobez::selftest
