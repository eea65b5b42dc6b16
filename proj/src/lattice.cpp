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

#include "cyclobez/lattice.hpp"

#include <stdexcept>
#include <utility>

#include "cyclobez/check.hpp"

namespace cyclobez {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("IntMatrix: dimensions must be >= 1");
    entries_.resize(rows * cols);
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const mpz_class& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                mpz_addmul(r(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
            }
        }
    }
    return r;
}

mpz_class determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix must be square");
    const std::size_t n = a.rows();
    IntMatrix m = a;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Bareiss step: every division here is exact
                mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

// In-place elimination state. Invariants maintained by every operation:
//   original = u * b * v,   u_inv = u^-1,   v_inv = v^-1.
struct Elimination {
    IntMatrix b, u, v, u_inv, v_inv;

    explicit Elimination(const IntMatrix& a)
        : b(a),
          u(IntMatrix::identity(a.rows())),
          v(IntMatrix::identity(a.cols())),
          u_inv(IntMatrix::identity(a.rows())),
          v_inv(IntMatrix::identity(a.cols())) {}

    void row_swap(std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < b.cols(); ++t) std::swap(b(i, t), b(j, t));
        for (std::size_t t = 0; t < u.rows(); ++t) std::swap(u(t, i), u(t, j));
        for (std::size_t t = 0; t < u_inv.cols(); ++t) std::swap(u_inv(i, t), u_inv(j, t));
    }

    void col_swap(std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < b.rows(); ++t) std::swap(b(t, i), b(t, j));
        for (std::size_t t = 0; t < v.cols(); ++t) std::swap(v(i, t), v(j, t));
        for (std::size_t t = 0; t < v_inv.rows(); ++t) std::swap(v_inv(t, i), v_inv(t, j));
    }

    // row_i += c * row_j
    void row_addmul(std::size_t i, std::size_t j, const mpz_class& c) {
        for (std::size_t t = 0; t < b.cols(); ++t)
            mpz_addmul(b(i, t).get_mpz_t(), c.get_mpz_t(), b(j, t).get_mpz_t());
        for (std::size_t t = 0; t < u_inv.cols(); ++t)
            mpz_addmul(u_inv(i, t).get_mpz_t(), c.get_mpz_t(), u_inv(j, t).get_mpz_t());
        for (std::size_t t = 0; t < u.rows(); ++t)
            mpz_submul(u(t, j).get_mpz_t(), c.get_mpz_t(), u(t, i).get_mpz_t());
    }

    // col_i += c * col_j
    void col_addmul(std::size_t i, std::size_t j, const mpz_class& c) {
        for (std::size_t t = 0; t < b.rows(); ++t)
            mpz_addmul(b(t, i).get_mpz_t(), c.get_mpz_t(), b(t, j).get_mpz_t());
        for (std::size_t t = 0; t < v_inv.rows(); ++t)
            mpz_addmul(v_inv(t, i).get_mpz_t(), c.get_mpz_t(), v_inv(t, j).get_mpz_t());
        for (std::size_t t = 0; t < v.cols(); ++t)
            mpz_submul(v(j, t).get_mpz_t(), c.get_mpz_t(), v(i, t).get_mpz_t());
    }

    void row_negate(std::size_t i) {
        for (std::size_t t = 0; t < b.cols(); ++t) b(i, t) = -b(i, t);
        for (std::size_t t = 0; t < u_inv.cols(); ++t) u_inv(i, t) = -u_inv(i, t);
        for (std::size_t t = 0; t < u.rows(); ++t) u(t, i) = -u(t, i);
    }
};

// Quotient round-to-nearest (floor, then one correction), so the
// remainder after a reduction step has at most half the pivot's magnitude.
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& piv) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), piv.get_mpz_t());
    if (2 * abs(r) > abs(piv)) ++q;
    return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    Elimination e(a);
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t steps = std::min(rows, cols);

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // smallest absolute nonzero entry; earliest row, then column
            std::size_t pr = rows, pc = cols;
            mpz_class best;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    const mpz_class& x = e.b(i, j);
                    if (x == 0) continue;
                    if (pr == rows || abs(x) < best) {
                        best = abs(x);
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pr == rows) break;  // submatrix exhausted
            if (pr != t) e.row_swap(t, pr);
            if (pc != t) e.col_swap(t, pc);

            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (e.b(i, t) == 0) continue;
                mpz_class q = nearest_quotient(e.b(i, t), e.b(t, t));
                if (q != 0) e.row_addmul(i, t, -q);
                if (e.b(i, t) != 0) dirty = true;
            }
            if (dirty) continue;
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (e.b(t, j) == 0) continue;
                mpz_class q = nearest_quotient(e.b(t, j), e.b(t, t));
                if (q != 0) e.col_addmul(j, t, -q);
                if (e.b(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot is alone in its row and column; force divisibility of
            // the rest of the submatrix before moving on
            bool fixed_up = false;
            for (std::size_t i = t + 1; i < rows && !fixed_up; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (!mpz_divisible_p(e.b(i, j).get_mpz_t(), e.b(t, t).get_mpz_t())) {
                        e.row_addmul(t, i, 1);
                        fixed_up = true;
                        break;
                    }
                }
            }
            if (!fixed_up) break;
        }
        if (e.b(t, t) < 0) e.row_negate(t);
    }

    return SmithDecomposition{std::move(e.u), std::move(e.b), std::move(e.v), std::move(e.u_inv),
                              std::move(e.v_inv)};
}

IntMatrix stack_matrix(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero() || *f.degree() < 1 || *g.degree() < 1)
        throw std::invalid_argument("stack_matrix: both degrees must be >= 1");
    const std::size_t df = *f.degree(), dg = *g.degree();
    IntMatrix m(df + dg, df + dg);
    for (std::size_t i = 0; i < dg; ++i) {
        for (std::size_t j = 0; j <= df; ++j) m(i + j, i) = f.coeffs()[j];
    }
    for (std::size_t i = 0; i < df; ++i) {
        for (std::size_t j = 0; j <= dg; ++j) m(i + j, dg + i) = g.coeffs()[j];
    }
    return m;
}

MinimalConstant minimal_constant(const IntPoly& f, const IntPoly& g) {
    const IntMatrix a = stack_matrix(f, g);
    const std::size_t n = a.rows();
    const SmithDecomposition s = smith_normal_form(a);

    for (std::size_t i = 0; i < n; ++i) {
        if (s.d(i, i) == 0) throw std::domain_error("minimal_constant: common factor");
    }

    // w = u^-1 * e0, where e0 picks the constant-coefficient row
    std::vector<mpz_class> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = s.u_inv(i, 0);

    mpz_class k = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class gcd_dw;
        mpz_gcd(gcd_dw.get_mpz_t(), s.d(i, i).get_mpz_t(), w[i].get_mpz_t());
        mpz_class need = s.d(i, i) / gcd_dw;
        mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), need.get_mpz_t());
    }

    // solution coordinates: z_i = k * w_i / d_i (exact), y = v^-1 * z
    std::vector<mpz_class> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class t = k * w[i];
        mpz_divexact(z[i].get_mpz_t(), t.get_mpz_t(), s.d(i, i).get_mpz_t());
    }
    std::vector<mpz_class> y(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            mpz_addmul(y[r].get_mpz_t(), s.v_inv(r, c).get_mpz_t(), z[c].get_mpz_t());
        }
    }

    const std::size_t dg = *g.degree();
    IntPoly pa(std::vector<mpz_class>(y.begin(), y.begin() + dg));
    IntPoly pb(std::vector<mpz_class>(y.begin() + dg, y.end()));

    internal_check(pa * f + pb * g == IntPoly::constant(k),
                   "minimal_constant: certificate fails to reproduce k");
    return MinimalConstant{std::move(k), std::move(pa), std::move(pb)};
}

}  // namespace cyclobez
