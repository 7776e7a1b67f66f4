#pragma once

#include "concord/errors.hpp"
#include "concord/exact/scalar.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace concord {

inline Rational conjugate(const Rational& x) { return x; }

template <class F>
bool is_zero(const F& x) {
    return x == F(0);
}

template <class S>
bool is_symmetric(const Mat<S>& a) {
    if (a.rows() != a.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = i + 1; j < a.cols(); ++j)
            if (a(i, j) != a(j, i)) return false;
    return true;
}

/// Determinant over a field by Gaussian elimination.
template <class F>
F determinant(Mat<F> a) {
    const Eigen::Index n = a.rows();
    if (n != a.cols()) throw InputError("determinant of non-square matrix");
    F det(1);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = c;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) return F(0);
        if (p != c) {
            a.row(p).swap(a.row(c));
            det = -det;
        }
        det = det * a(c, c);
        for (Eigen::Index r = c + 1; r < n; ++r) {
            if (is_zero(a(r, c))) continue;
            F f = a(r, c) / a(c, c);
            for (Eigen::Index k = c; k < n; ++k) a(r, k) = a(r, k) - f * a(c, k);
        }
    }
    return det;
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
Integer determinant(const IntMatrix& a);

template <class F>
Eigen::Index rank(Mat<F> a) {
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
        Eigen::Index p = r;
        while (p < a.rows() && is_zero(a(p, c))) ++p;
        if (p == a.rows()) continue;
        a.row(p).swap(a.row(r));
        for (Eigen::Index i = r + 1; i < a.rows(); ++i) {
            if (is_zero(a(i, c))) continue;
            F f = a(i, c) / a(r, c);
            for (Eigen::Index k = c; k < a.cols(); ++k) a(i, k) = a(i, k) - f * a(r, k);
        }
        ++r;
    }
    return r;
}

/// Solves a X = b for square nonsingular a; nullopt when a is singular.
template <class F>
std::optional<Mat<F>> solve(Mat<F> a, Mat<F> b) {
    const Eigen::Index n = a.rows();
    if (n != a.cols() || b.rows() != n) throw InputError("solve: dimension mismatch");
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = c;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) return std::nullopt;
        a.row(p).swap(a.row(c));
        b.row(p).swap(b.row(c));
        F inv = F(1) / a(c, c);
        for (Eigen::Index k = 0; k < n; ++k) a(c, k) = a(c, k) * inv;
        for (Eigen::Index k = 0; k < b.cols(); ++k) b(c, k) = b(c, k) * inv;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == c || is_zero(a(r, c))) continue;
            F f = a(r, c);
            for (Eigen::Index k = 0; k < n; ++k) a(r, k) = a(r, k) - f * a(c, k);
            for (Eigen::Index k = 0; k < b.cols(); ++k) b(r, k) = b(r, k) - f * b(c, k);
        }
    }
    return b;
}

template <class F>
Mat<F> inverse(const Mat<F>& a) {
    auto x = solve<F>(a, Mat<F>::Identity(a.rows(), a.rows()));
    if (!x) throw InputError("inverse of singular matrix");
    return *x;
}

/**
 * Signature of a Hermitian matrix over a field F with involution `conjugate`.
 *
 * Diagonal pivots are used when available; otherwise a 2x2 block
 * [[0, b], [conj b, 0]] is split off, which contributes zero. `real_sign`
 * must return the sign of a self-conjugate element.
 */
template <class F, class RealSign>
int hermitian_signature(Mat<F> a, RealSign real_sign) {
    std::vector<Eigen::Index> live;
    for (Eigen::Index i = 0; i < a.rows(); ++i) live.push_back(i);
    int sig = 0;
    while (!live.empty()) {
        auto diag = std::find_if(live.begin(), live.end(),
                                 [&](Eigen::Index i) { return !is_zero(a(i, i)); });
        if (diag != live.end()) {
            const Eigen::Index i = *diag;
            const F p = a(i, i);
            sig += real_sign(p);
            live.erase(diag);
            const F pinv = F(1) / p;
            for (Eigen::Index r : live) {
                if (is_zero(a(r, i))) continue;
                const F f = a(r, i) * pinv;
                for (Eigen::Index s : live) a(r, s) = a(r, s) - f * a(i, s);
            }
            continue;
        }
        Eigen::Index bi = -1, bj = -1;
        for (std::size_t x = 0; x < live.size() && bi < 0; ++x)
            for (std::size_t y = x + 1; y < live.size(); ++y)
                if (!is_zero(a(live[x], live[y]))) {
                    bi = live[x];
                    bj = live[y];
                    break;
                }
        if (bi < 0) break;  // remaining block is zero
        const F b = a(bi, bj);
        const F binv = F(1) / b;
        const F bbarinv = F(1) / conjugate(b);
        live.erase(std::find(live.begin(), live.end(), bi));
        live.erase(std::find(live.begin(), live.end(), bj));
        for (Eigen::Index r : live) {
            const F ri = a(r, bi) * bbarinv;
            const F rj = a(r, bj) * binv;
            if (is_zero(ri) && is_zero(rj)) continue;
            for (Eigen::Index s : live) a(r, s) = a(r, s) - rj * a(bi, s) - ri * a(bj, s);
        }
    }
    return sig;
}

/// Signature of a symmetric rational matrix; rejects non-symmetric input.
int signature(const RatMatrix& a);
int signature(const IntMatrix& a);

}  // namespace concord
