#pragma once

#include <cstddef>
#include <vector>

#include "torfol/errors.hpp"
#include "torfol/rational.hpp"

namespace torfol {

/// Dense integer matrix, row major.
using IMat = std::vector<std::vector<Integer>>;
using IVec = std::vector<Integer>;

inline IMat imat(std::size_t rows, std::size_t cols) {
    return IMat(rows, IVec(cols, Integer(0)));
}

inline IMat identity(std::size_t n) {
    IMat a = imat(n, n);
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

inline IMat matmul(const IMat& a, const IMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IMat r = imat(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

inline IMat transpose(const IMat& a) {
    if (a.empty()) return {};
    IMat r = imat(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

struct SmithResult {
    IMat L, D, R;       // L * V * R = D, diagonal with d1 | d2 | ...
    IMat Linv, Rinv;    // exact integer inverses of the unimodular factors
    std::size_t rank = 0;
};

/// Smith normal form with transformation matrices and their inverses.
inline SmithResult smith_normal_form(const IMat& v) {
    std::size_t m = v.size(), q = m ? v[0].size() : 0;
    SmithResult s;
    s.D = v;
    s.L = identity(m);
    s.Linv = identity(m);
    s.R = identity(q);
    s.Rinv = identity(q);
    IMat& d = s.D;

    auto row_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(d[i], d[j]);
        std::swap(s.L[i], s.L[j]);
        for (std::size_t t = 0; t < m; ++t) std::swap(s.Linv[t][i], s.Linv[t][j]);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t t = 0; t < m; ++t) std::swap(d[t][i], d[t][j]);
        for (std::size_t t = 0; t < q; ++t) std::swap(s.R[t][i], s.R[t][j]);
        std::swap(s.Rinv[i], s.Rinv[j]);
    };
    // row_j += c * row_i
    auto row_add = [&](std::size_t j, std::size_t i, const Integer& c) {
        if (c == 0) return;
        for (std::size_t t = 0; t < q; ++t) d[j][t] += c * d[i][t];
        for (std::size_t t = 0; t < m; ++t) s.L[j][t] += c * s.L[i][t];
        for (std::size_t t = 0; t < m; ++t) s.Linv[t][i] -= c * s.Linv[t][j];
    };
    // col_j += c * col_i
    auto col_add = [&](std::size_t j, std::size_t i, const Integer& c) {
        if (c == 0) return;
        for (std::size_t t = 0; t < m; ++t) d[t][j] += c * d[t][i];
        for (std::size_t t = 0; t < q; ++t) s.R[t][j] += c * s.R[t][i];
        for (std::size_t t = 0; t < q; ++t) s.Rinv[i][t] -= c * s.Rinv[j][t];
    };
    auto row_negate = [&](std::size_t i) {
        for (auto& x : d[i]) x = -x;
        for (auto& x : s.L[i]) x = -x;
        for (std::size_t t = 0; t < m; ++t) s.Linv[t][i] = -s.Linv[t][i];
    };

    std::size_t t = 0;
    while (t < m && t < q) {
        // Locate a nonzero pivot of minimal absolute value in the trailing block.
        std::size_t pi = t, pj = t;
        bool found = false;
        Integer best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < q; ++j) {
                if (d[i][j] == 0) continue;
                Integer a = abs(d[i][j]);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d[i][t] == 0) continue;
                Integer c;
                mpz_fdiv_q(c.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
                row_add(i, t, -c);
                if (d[i][t] != 0) {
                    row_swap(t, i); // smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < q; ++j) {
                if (d[t][j] == 0) continue;
                Integer c;
                mpz_fdiv_q(c.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
                col_add(j, t, -c);
                if (d[t][j] != 0) {
                    col_swap(t, j);
                    clean = false;
                }
            }
        }
        // Enforce divisibility of the trailing block by the pivot.
        bool restart = false;
        for (std::size_t i = t + 1; i < m && !restart; ++i)
            for (std::size_t j = t + 1; j < q && !restart; ++j)
                if (d[i][j] % d[t][t] != 0) {
                    row_add(t, i, 1);
                    restart = true;
                }
        if (restart) continue;
        if (d[t][t] < 0) row_negate(t);
        ++t;
    }
    s.rank = t;
    return s;
}

/// Row-style Hermite normal form of the lattice spanned by the input rows.
/// Pivots positive, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped; the result is the canonical basis of the lattice.
inline IMat hermite_row_basis(IMat rows) {
    std::size_t m = rows.size(), n = m ? rows[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // gcd elimination in column c below row r
        for (;;) {
            std::size_t piv = m;
            for (std::size_t i = r; i < m; ++i)
                if (rows[i][c] != 0 && (piv == m || abs(rows[i][c]) < abs(rows[piv][c]))) piv = i;
            if (piv == m) break;
            std::swap(rows[r], rows[piv]);
            bool again = false;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (rows[i][c] == 0) continue;
                Integer f;
                mpz_fdiv_q(f.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
                if (rows[i][c] != 0) again = true;
            }
            if (!again) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (auto& x : rows[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) {
            Integer f;
            mpz_fdiv_q(f.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

/// Canonical basis of the left kernel {x : x V = 0} of an integer matrix.
inline IMat left_kernel_basis(const IMat& v) {
    SmithResult s = smith_normal_form(v);
    IMat rows;
    for (std::size_t i = s.rank; i < s.L.size(); ++i) rows.push_back(s.L[i]);
    return hermite_row_basis(std::move(rows));
}

/// Completes a primitive integer vector to a unimodular matrix having it
/// as first row. Throws when the vector is not primitive.
inline IMat complete_to_unimodular(const IVec& c) {
    IMat row(1, c);
    SmithResult s = smith_normal_form(row);
    if (s.rank != 1 || abs(s.D[0][0]) != 1)
        throw LatticeError("vector is not primitive; cannot extend to a lattice basis");
    // c * R = eps * e1, so c = e1 * (eps * Rinv); flip sign if needed.
    Integer eps = s.D[0][0] * s.L[0][0]; // both +-1
    IMat u = s.Rinv;
    if (eps < 0)
        for (auto& rw : u)
            for (auto& x : rw) x = -x;
    u[0] = c;
    return u;
}

} // namespace torfol
