#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "torfol/rational.hpp"

namespace torfol {

/// Dense exact matrix over Q, row major.
using QMat = std::vector<std::vector<Rational>>;
using QVec = std::vector<Rational>;

inline QMat qmat(std::size_t rows, std::size_t cols) {
    return QMat(rows, QVec(cols, Rational(0)));
}

/// In-place reduced row echelon form; returns pivot column indices.
inline std::vector<std::size_t> rref(QMat& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    std::size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && is_zero(a[sel][c])) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a[i][c])) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of the null space {x : a x = 0}.
inline std::vector<QVec> kernel_basis(QMat a) {
    if (a.empty()) return {};
    std::size_t cols = a[0].size();
    std::vector<std::size_t> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of a x = b, or nullopt when inconsistent.
inline std::optional<QVec> solve(QMat a, QVec b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<std::size_t> pivots = rref(a);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] == cols) return std::nullopt; // pivot in augmented column
    QVec x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

inline std::size_t rank(QMat a) { return rref(a).size(); }

} // namespace torfol
