#include "concord/exact/linalg.hpp"

namespace concord {

Integer determinant(const IntMatrix& m) {
    const Eigen::Index n = m.rows();
    if (n != m.cols()) throw InputError("determinant of non-square matrix");
    if (n == 0) return Integer(1);
    IntMatrix a = m;
    Integer prev(1);
    int s = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return Integer(0);
            a.row(p).swap(a.row(k));
            s = -s;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return s * a(n - 1, n - 1);
}

int signature(const RatMatrix& a) {
    if (!is_symmetric(a)) throw InputError("signature: matrix is not symmetric");
    return hermitian_signature(a, [](const Rational& x) { return sign(x); });
}

int signature(const IntMatrix& a) { return signature(to_rational(a)); }

}  // namespace concord
