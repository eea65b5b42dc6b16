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

#ifndef CYCLOBEZ_LATTICE_HPP
#define CYCLOBEZ_LATTICE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "cyclobez/intpoly.hpp"

namespace cyclobez {

/// Rectangular matrix of arbitrary-precision integers, row-major.
class IntMatrix {
   public:
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    bool operator==(const IntMatrix&) const = default;

   private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class determinant(const IntMatrix& a);

/// a = u * d * v with u, v unimodular and d diagonal, each diagonal entry
/// nonnegative and dividing the next. u_inv and v_inv are the exact
/// inverses, accumulated during elimination; minimal_constant consumes
/// them for lattice membership and coordinate recovery.
struct SmithDecomposition {
    IntMatrix u, d, v;
    IntMatrix u_inv, v_inv;
};

/// Exact Smith normal form by integer row/column elimination. Pivot
/// selection: smallest absolute nonzero entry, earliest row then column.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Coefficient embedding of (a, b) -> a*f + b*g on the degree-bounded
/// space deg a < deg g, deg b < deg f: an N x N matrix, N = deg f + deg g,
/// whose columns are x^i*f for 0 <= i < deg g followed by x^j*g for
/// 0 <= j < deg f; row r holds coefficients of x^r. Both degrees must be
/// at least 1.
IntMatrix stack_matrix(const IntPoly& f, const IntPoly& g);

struct MinimalConstant {
    mpz_class k;
    IntPoly a, b;
};

/// The smallest positive integer k expressible as a*f + b*g with integer
/// polynomial coefficients, together with one such pair (a, b), found by
/// Smith-reducing the stacked coefficient lattice: k*e0 lies in the
/// column lattice iff d_i divides k*w_i for w = u_inv * e0, so the
/// minimum is lcm_i(d_i / gcd(d_i, w_i)). Degree bounds deg a < deg g,
/// deg b < deg f lose no generality (reduce b mod the monic f and absorb
/// the quotient into a). Throws std::domain_error if f and g share a
/// factor (a zero invariant factor); the identity a*f + b*g = k is
/// re-checked on every call.
MinimalConstant minimal_constant(const IntPoly& f, const IntPoly& g);

}  // namespace cyclobez

#endif
