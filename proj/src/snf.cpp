#include "concord/exact/snf.hpp"

#include "concord/errors.hpp"

#include <sstream>

namespace concord {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

struct Reducer {
    IntMatrix D, U, Uinv, V;

    void swap_rows(Eigen::Index i, Eigen::Index j) {
        if (i == j) return;
        D.row(i).swap(D.row(j));
        U.row(i).swap(U.row(j));
        Uinv.col(i).swap(Uinv.col(j));
    }
    void swap_cols(Eigen::Index i, Eigen::Index j) {
        if (i == j) return;
        D.col(i).swap(D.col(j));
        V.col(i).swap(V.col(j));
    }
    // row_i -= q * row_t
    void row_sub(Eigen::Index i, Eigen::Index t, const Integer& q) {
        D.row(i) -= q * D.row(t);
        U.row(i) -= q * U.row(t);
        Uinv.col(t) += q * Uinv.col(i);
    }
    // col_j -= q * col_t
    void col_sub(Eigen::Index j, Eigen::Index t, const Integer& q) {
        D.col(j) -= q * D.col(t);
        V.col(j) -= q * V.col(t);
    }
    // Rows (t, i) <- [[x, y], [-b/g, a/g]] (rows t, i), where a = D(t,col), b = D(i,col),
    // g = x a + y b = gcd(a, b). The 2x2 block has determinant 1.
    void row_gcd(Eigen::Index t, Eigen::Index i, Eigen::Index col) {
        const Integer a = D(t, col), b = D(i, col);
        Integer g, x, y;
        ext_gcd(a, b, g, x, y);
        const Integer p = -b / g, q = a / g;
        auto mix = [&](IntMatrix& m) {
            IntVector rt = m.row(t), ri = m.row(i);
            m.row(t) = x * rt + y * ri;
            m.row(i) = p * rt + q * ri;
        };
        mix(D);
        mix(U);
        // inverse block [[q, -y], [-p, x]] applied on the right of Uinv columns (t, i)
        IntVector ct = Uinv.col(t), ci = Uinv.col(i);
        Uinv.col(t) = q * ct - p * ci;
        Uinv.col(i) = -y * ct + x * ci;
    }
    void col_gcd(Eigen::Index t, Eigen::Index j, Eigen::Index row) {
        const Integer a = D(row, t), b = D(row, j);
        Integer g, x, y;
        ext_gcd(a, b, g, x, y);
        const Integer p = -b / g, q = a / g;
        auto mix = [&](IntMatrix& m) {
            IntVector ct = m.col(t), cj = m.col(j);
            m.col(t) = x * ct + y * cj;
            m.col(j) = p * ct + q * cj;
        };
        mix(D);
        mix(V);
    }
    static void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
        Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            Integer qq = floor_div(r0, r1);
            Integer tmp = r0 - qq * r1;
            r0 = r1;
            r1 = tmp;
            tmp = s0 - qq * s1;
            s0 = s1;
            s1 = tmp;
            tmp = t0 - qq * t1;
            t0 = t1;
            t1 = tmp;
        }
        if (r0 < 0) {
            r0 = -r0;
            s0 = -s0;
            t0 = -t0;
        }
        g = r0;
        x = s0;
        y = t0;
    }
    void negate_row(Eigen::Index t) {
        D.row(t) = -D.row(t);
        U.row(t) = -U.row(t);
        Uinv.col(t) = -Uinv.col(t);
    }
};

}  // namespace

std::vector<Integer> SmithForm::diagonal() const {
    std::vector<Integer> d;
    for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    const Eigen::Index r = m.rows(), c = m.cols();
    Reducer s{m, IntMatrix::Identity(r, r), IntMatrix::Identity(r, r), IntMatrix::Identity(c, c)};
    Eigen::Index t = 0;
    for (; t < std::min(r, c); ++t) {
        Eigen::Index pi = -1, pj = -1;
        Integer best;
        for (Eigen::Index i = t; i < r; ++i)
            for (Eigen::Index j = t; j < c; ++j)
                if (s.D(i, j) != 0 && (pi < 0 || abs_value(s.D(i, j)) < best)) {
                    best = abs_value(s.D(i, j));
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);
        for (;;) {
            for (Eigen::Index i = t + 1; i < r; ++i) {
                if (s.D(i, t) == 0) continue;
                if (s.D(i, t) % s.D(t, t) == 0)
                    s.row_sub(i, t, s.D(i, t) / s.D(t, t));
                else
                    s.row_gcd(t, i, t);
            }
            bool clean = true;
            for (Eigen::Index j = t + 1; j < c; ++j) {
                if (s.D(t, j) == 0) continue;
                if (s.D(t, j) % s.D(t, t) == 0) {
                    s.col_sub(j, t, s.D(t, j) / s.D(t, t));
                } else {
                    s.col_gcd(t, j, t);
                    clean = false;  // column t may have refilled
                }
            }
            if (!clean) continue;
            Eigen::Index bad = -1;
            for (Eigen::Index i = t + 1; i < r && bad < 0; ++i)
                for (Eigen::Index j = t + 1; j < c; ++j)
                    if (s.D(i, j) % s.D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            s.row_sub(t, bad, Integer(-1));
        }
        if (s.D(t, t) < 0) s.negate_row(t);
    }
    SmithForm out{std::move(s.D), std::move(s.U), std::move(s.V), std::move(s.Uinv), t};
    return out;
}

Integer AbelianGroup::order() const {
    if (free_rank != 0) throw InputError("order of an infinite group");
    Integer n(1);
    for (const auto& d : torsion) n *= d;
    return n;
}

std::string AbelianGroup::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    if (free_rank > 0) {
        os << (first ? "" : " + ") << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

AbelianGroup cokernel(const IntMatrix& m) {
    AbelianGroup g;
    if (m.cols() == 0) {
        g.free_rank = m.rows();
        return g;
    }
    SmithForm s = smith_normal_form(m);
    for (Eigen::Index i = 0; i < s.rank; ++i)
        if (s.D(i, i) != 1) g.torsion.push_back(s.D(i, i));
    g.free_rank = static_cast<long>(m.rows() - s.rank);
    return g;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    if (m.rows() == 0) return IntMatrix::Identity(m.cols(), m.cols());
    SmithForm s = smith_normal_form(m);
    return s.V.rightCols(m.cols() - s.rank);
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b) {
    if (b.rows() != m.rows()) throw InputError("solve_integer: dimension mismatch");
    if (m.cols() == 0) {
        if (b.isZero()) return IntVector(0);
        return std::nullopt;
    }
    SmithForm s = smith_normal_form(m);
    IntVector ub = s.U * b;
    IntVector y = IntVector::Zero(m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (i < s.rank) {
            if (ub(i) % s.D(i, i) != 0) return std::nullopt;
            y(i) = ub(i) / s.D(i, i);
        } else if (ub(i) != 0) {
            return std::nullopt;
        }
    }
    return IntVector(s.V * y);
}

IntMatrix lattice_basis(const IntMatrix& m) {
    if (m.cols() == 0) return IntMatrix(m.rows(), 0);
    SmithForm s = smith_normal_form(m);
    IntMatrix b(m.rows(), s.rank);
    for (Eigen::Index i = 0; i < s.rank; ++i) b.col(i) = s.U_inverse.col(i) * s.D(i, i);
    return b;
}

bool lattice_contains(const IntMatrix& m, const IntMatrix& sub) {
    for (Eigen::Index j = 0; j < sub.cols(); ++j)
        if (!solve_integer(m, sub.col(j))) return false;
    return true;
}

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw InputError("lattice_intersection: dimension mismatch");
    if (a.cols() == 0 || b.cols() == 0) return IntMatrix(a.rows(), 0);
    IntMatrix ab(a.rows(), a.cols() + b.cols());
    ab << a, -b;
    IntMatrix k = integer_kernel(ab);
    return lattice_basis(a * k.topRows(a.cols()));
}

}  // namespace concord
