#pragma once

#include <vector>

#include "bergman/jet.hpp"

namespace bergman {

template <class S>
using Matrix = std::vector<std::vector<S>>;

template <class S>
Matrix<S> matrix_zero(int rows, int cols) {
    return Matrix<S>(static_cast<std::size_t>(rows),
                     std::vector<S>(static_cast<std::size_t>(cols), scalar_traits<S>::zero()));
}

template <class S>
Matrix<S> matrix_identity(int n) {
    Matrix<S> m = matrix_zero<S>(n, n);
    for (int i = 0; i < n; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = scalar_traits<S>::one();
    return m;
}

/// Determinant by Gaussian elimination with exact division (field scalars).
template <class S>
S matrix_det(Matrix<S> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw NotSquare("determinant of a non-square matrix");
    S det = scalar_traits<S>::one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (scalar_traits<S>::abs_value(m[r][col]) >
                scalar_traits<S>::abs_value(m[pivot][col]))
                pivot = r;
        if (!scalar_traits<S>::keep(m[pivot][col])) return scalar_traits<S>::zero();
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        const S inv = scalar_traits<S>::one() / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (!scalar_traits<S>::keep(m[r][col])) continue;
            const S f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
        }
    }
    return det;
}

/// Inverse by Gauss-Jordan elimination; throws on singular input.
template <class S>
Matrix<S> matrix_inverse(Matrix<S> m) {
    const std::size_t n = m.size();
    Matrix<S> inv = matrix_identity<S>(static_cast<int>(n));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (scalar_traits<S>::abs_value(m[r][col]) >
                scalar_traits<S>::abs_value(m[pivot][col]))
                pivot = r;
        if (!scalar_traits<S>::keep(m[pivot][col]))
            throw DegenerateMetric("singular matrix has no inverse");
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            std::swap(inv[pivot], inv[col]);
        }
        const S d = scalar_traits<S>::one() / m[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            m[col][c] = m[col][c] * d;
            inv[col][c] = inv[col][c] * d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || !scalar_traits<S>::keep(m[r][col])) continue;
            const S f = m[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                m[r][c] = m[r][c] - f * m[col][c];
                inv[r][c] = inv[r][c] - f * inv[col][c];
            }
        }
    }
    return inv;
}

/// Leading principal minors det(m[0..k][0..k]) for k = 1..n.
template <class S>
std::vector<S> leading_principal_minors(const Matrix<S>& m) {
    std::vector<S> minors;
    for (std::size_t k = 1; k <= m.size(); ++k) {
        Matrix<S> sub(k, std::vector<S>(k, scalar_traits<S>::zero()));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
        minors.push_back(matrix_det(std::move(sub)));
    }
    return minors;
}

template <class S>
using JetMatrix = std::vector<std::vector<Jet<S>>>;

/// Constant-term matrix of a jet matrix.
template <class S>
Matrix<S> constant_part(const JetMatrix<S>& g) {
    Matrix<S> m = matrix_zero<S>(static_cast<int>(g.size()), static_cast<int>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) m[i][j] = g[i][j].constant_term();
    return m;
}

/// Solves g * X = I order by order in the total-degree grading:
/// X_0 = g(0)^{-1}, X_d = -X_0 * sum_{e=1..d} g_e X_{d-e}.
template <class S>
JetMatrix<S> jet_matrix_inverse(const JetMatrix<S>& g) {
    const std::size_t n = g.size();
    for (const auto& row : g)
        if (row.size() != n) throw NotSquare("inverse of a non-square jet matrix");
    const VarLayout lay = g[0][0].layout();
    const int cap = g[0][0].degree_cap();

    const Matrix<S> x0 = matrix_inverse(constant_part(g));

    // graded slices of every entry
    std::vector<std::vector<std::vector<Jet<S>>>> gp(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gp[i].push_back(detail::graded_parts(g[i][j]));

    // x[d][i][j]: homogeneous degree-d slice of the inverse
    std::vector<JetMatrix<S>> x;
    x.reserve(static_cast<std::size_t>(cap) + 1);
    {
        JetMatrix<S> m0(n, std::vector<Jet<S>>(n, Jet<S>(lay, cap)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m0[i][j] = Jet<S>::constant(lay, cap, x0[i][j]);
        x.push_back(std::move(m0));
    }
    for (int d = 1; d <= cap; ++d) {
        JetMatrix<S> s(n, std::vector<Jet<S>>(n, Jet<S>(lay, cap)));
        for (int e = 1; e <= d; ++e)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t t = 0; t < n; ++t)
                        detail::accumulate_product(gp[i][t][static_cast<std::size_t>(e)],
                                                   x[static_cast<std::size_t>(d - e)][t][j], s[i][j]);
        JetMatrix<S> xd(n, std::vector<Jet<S>>(n, Jet<S>(lay, cap)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t t = 0; t < n; ++t) {
                    Jet<S> c = s[t][j] * x0[i][t];
                    xd[i][j] = xd[i][j] - c;
                }
            }
        x.push_back(std::move(xd));
    }

    JetMatrix<S> r(n, std::vector<Jet<S>>(n, Jet<S>(lay, cap)));
    for (const auto& slice : x)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (const auto& [k, c] : slice[i][j].terms()) r[i][j].add_term(k, c);
    return r;
}

template <class S>
JetMatrix<S> jet_matrix_mul(const JetMatrix<S>& a, const JetMatrix<S>& b) {
    const std::size_t n = a.size();
    JetMatrix<S> r(n, std::vector<Jet<S>>(n, Jet<S>(a[0][0].layout(), a[0][0].degree_cap())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) r[i][j] = r[i][j] + a[i][t] * b[t][j];
    return r;
}

} // namespace bergman
