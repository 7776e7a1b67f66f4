#include "concord/knots.hpp"

#include "concord/errors.hpp"
#include "concord/exact/cyclotomic.hpp"
#include "concord/exact/linalg.hpp"

#include <mpfr.h>

#include <algorithm>
#include <bit>
#include <numeric>

namespace concord {

namespace {

Rational rat(const Integer& x) { return Rational(x); }

// tan(pi k/d) rounded to a rational at the given precision.
Rational tan_pi_approx(long k, long d, mpfr_prec_t prec) {
    mpfr_t x;
    mpfr_init2(x, prec);
    mpfr_const_pi(x, MPFR_RNDN);
    mpfr_mul_si(x, x, k, MPFR_RNDN);
    mpfr_div_si(x, x, d, MPFR_RNDN);
    mpfr_tan(x, x, MPFR_RNDN);
    Rational q;
    mpfr_get_q(q.backend().data(), x);
    mpfr_clear(x);
    return q;
}

Rational two_pow(long e) {
    return e >= 0 ? Rational(power(Integer(2), static_cast<unsigned>(e)))
                  : Rational(1) / Rational(power(Integer(2), static_cast<unsigned>(-e)));
}

int cyclotomic_signature(const IntMatrix& s, long k, long d) {
    auto field = cyclotomic_field(d);
    const Cyclo w = Cyclo::zeta(field, k);
    const Cyclo a = Cyclo(1) - w, abar = Cyclo(1) - conjugate(w);
    const Eigen::Index n = s.rows();
    Mat<Cyclo> form(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) form(i, j) = a * Cyclo(rat(s(i, j))) + abar * Cyclo(rat(s(j, i)));
    return hermitian_signature<Cyclo>(form, [](const Cyclo& x) { return real_sign(x); });
}

// The Hermitian matrix s(S+S^T) - i(S-S^T) over Q(i).
Mat<Cyclo> cayley_form(const IntMatrix& s, const Rational& param) {
    auto gauss = cyclotomic_field(4);
    const Cyclo i = Cyclo::zeta(gauss, 1);
    const Eigen::Index n = s.rows();
    Mat<Cyclo> h(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
            h(r, c) = Cyclo(param * rat(s(r, c) + s(c, r))) - i * Cyclo(rat(s(r, c) - s(c, r)));
    return h;
}

int cayley_sig(const IntMatrix& s, const Rational& param) {
    return hermitian_signature<Cyclo>(cayley_form(s, param), [](const Cyclo& x) { return real_sign(x); });
}

poly::Poly cayley_det_poly(const IntMatrix& s) {
    std::vector<Rational> xs, ys;
    for (Eigen::Index j = 0; j <= s.rows(); ++j) {
        const Rational x(j);
        Cyclo v = determinant<Cyclo>(cayley_form(s, x));
        if (!v.is_rational()) throw InvariantViolation("Hermitian determinant is not real");
        xs.push_back(x);
        ys.push_back(v.rational_part());
    }
    return poly::interpolate(xs, ys);
}

bool degenerate_at(const IntMatrix& s, long k, long d) {
    (void)k;  // omega is a primitive d-th root, so only d matters
    poly::Poly delta = seifert_determinant(s);
    return poly::divmod(delta, cyclotomic(static_cast<int>(d)).poly_part()).second.empty();
}

// Average of the one-sided limits of the signature function at a zero omega = exp(2 pi i k/d).
int jump_average(const IntMatrix& s, long k, long d) {
    const poly::Poly p = cayley_det_poly(s);
    if (2 * k == d) {
        const Rational big = poly::root_bound(p) + 1;
        const int left = cayley_sig(s, big), right = -cayley_sig(s, -big);
        if ((left + right) % 2) throw InvariantViolation("odd jump at omega = -1");
        return (left + right) / 2;
    }
    Rational width = Rational(1, 256);
    for (mpfr_prec_t prec = 64; prec <= (1 << 16); prec *= 2, width /= 65536) {
        const Rational q = tan_pi_approx(k, d, prec);
        const Rational eps = (mp::abs(q) + 1) * two_pow(-static_cast<long>(prec) + 16);
        for (const auto& [a, b] : poly::isolate_real_roots(p, width)) {
            if (a < q - eps && q + eps < b) {
                const int lo = cayley_sig(s, a), hi = cayley_sig(s, b);
                if ((lo + hi) % 2) throw InvariantViolation("odd signature jump");
                return sign(q) * (lo + hi) / 2;
            }
        }
    }
    throw CapabilityError("could not isolate the jump point tan(pi*" + std::to_string(k) + "/" + std::to_string(d) + ")");
}

int cayley_regular(const IntMatrix& s, long k, long d) {
    if (2 * k == d) {
        RatMatrix sym = to_rational(IntMatrix(s + s.transpose()));
        return signature(sym);
    }
    const poly::Poly p = cayley_det_poly(s);
    Rational width = Rational(1, 256);
    for (mpfr_prec_t prec = 64; prec <= (1 << 16); prec *= 2, width /= 65536) {
        const Rational q = tan_pi_approx(k, d, prec);
        const Rational eps = (mp::abs(q) + 1) * two_pow(-static_cast<long>(prec) + 16);
        bool clear = true;
        for (const auto& [a, b] : poly::isolate_real_roots(p, width))
            if (!(q + eps < a || b < q - eps)) clear = false;
        if (clear) return sign(q) * cayley_sig(s, q);
    }
    throw CapabilityError("could not separate tan(pi*" + std::to_string(k) + "/" + std::to_string(d) + ") from the roots");
}

void check_root_index(long k, long d) {
    if (d < 1 || k < 0 || k >= d) throw InputError("need 0 <= k < d and d >= 1");
}

// A nonzero vector in the kernel of a square rational matrix of corank 1.
RatVector kernel_vector(RatMatrix a) {
    const Eigen::Index n = a.cols();
    std::vector<Eigen::Index> pivot_col;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < n && r < a.rows(); ++c) {
        Eigen::Index p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.row(p).swap(a.row(r));
        const Rational inv = Rational(1) / a(r, c);
        for (Eigen::Index j = 0; j < n; ++j) a(r, j) *= inv;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (Eigen::Index j = 0; j < n; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r != n - 1) throw InvariantViolation("eigenspace is not one-dimensional");
    Eigen::Index free = 0;
    while (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) ++free;
    RatVector v = RatVector::Zero(n);
    v(free) = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v(pivot_col[i]) = -a(static_cast<Eigen::Index>(i), free);
    return v;
}

}  // namespace

void validate_seifert(const IntMatrix& s) {
    if (s.rows() != s.cols()) throw InputError("Seifert matrix must be square");
    if (s.rows() % 2) throw InputError("Seifert matrix must have even size");
    if (s.rows() == 0) return;
    const Integer det = determinant(IntMatrix(s - s.transpose()));
    if (det != 1 && det != -1) throw InputError("det(S - S^T) = " + to_string(det) + ", expected +-1");
}

poly::Poly seifert_determinant(const IntMatrix& s) {
    const Eigen::Index n = s.rows();
    std::vector<Rational> xs, ys;
    for (Eigen::Index j = 0; j <= n; ++j) {
        xs.emplace_back(j);
        ys.emplace_back(determinant(IntMatrix(Integer(j) * s - s.transpose())));
    }
    return poly::interpolate(xs, ys);
}

LaurentPoly alexander_polynomial(const IntMatrix& s) {
    validate_seifert(s);
    LaurentPoly delta = LaurentPoly::from_poly(seifert_determinant(s));
    if (delta.is_zero()) throw InvariantViolation("Alexander polynomial vanished");
    const int sum = delta.low() + delta.high();
    if (sum % 2) throw InvariantViolation("Alexander polynomial is not symmetric");
    delta = delta.shifted(-sum / 2);
    if (delta.eval(Rational(1)) < 0) delta = -delta;
    return delta;
}

int lt_signature(const IntMatrix& s, long k, long d) {
    validate_seifert(s);
    check_root_index(k, d);
    if (k == 0 || s.rows() == 0) return 0;
    const long g = std::gcd(k, d);
    k /= g;
    d /= g;
    if (degenerate_at(s, k, d)) return jump_average(s, k, d);
    return cyclotomic_signature(s, k, d);
}

int lt_signature_cayley(const IntMatrix& s, long k, long d) {
    validate_seifert(s);
    check_root_index(k, d);
    if (k == 0 || s.rows() == 0) return 0;
    const long g = std::gcd(k, d);
    k /= g;
    d /= g;
    if (degenerate_at(s, k, d)) return jump_average(s, k, d);
    return cayley_regular(s, k, d);
}

Rational rho_zd(const IntMatrix& s, long d) {
    if (d < 1) throw InputError("rho needs d >= 1");
    long total = 0;
    for (long k = 0; k < d; ++k) total += lt_signature(s, k, d);
    return Rational(total) / d;
}

AbelianGroup branched_cover_homology(const IntMatrix& s, long r) {
    validate_seifert(s);
    if (r < 2) throw InputError("branched cover needs r >= 2");
    const Eigen::Index n = s.rows();
    IntMatrix m = IntMatrix::Zero(n * r, n * r);
    for (long b = 0; b < r; ++b) {
        m.block(b * n, ((b + 1) % r) * n, n, n) += s;
        m.block(b * n, b * n, n, n) -= s.transpose();
    }
    return cokernel(m);
}

std::vector<Metabolizer> blanchfield_metabolizers(const IntMatrix& s) {
    const LaurentPoly delta = alexander_polynomial(s);
    const Eigen::Index n = s.rows();
    if (delta.is_constant()) return {Metabolizer{{}, RatMatrix(n, 0)}};
    if (determinant(s) == 0)
        throw CapabilityError("metabolizers: singular Seifert matrix (reduce by S-equivalence first)");
    const Factorization fac = factor_rational_poly(delta);
    for (const auto& [f, e] : fac.factors)
        if (f.span() != 1 || e != 1)
            throw CapabilityError("metabolizers: Alexander module is not a sum of distinct linear summands");
    if (static_cast<Eigen::Index>(fac.factors.size()) != n) throw InvariantViolation("degree mismatch in Alexander polynomial");
    if (n > 20) throw CapabilityError("metabolizers: too many summands to enumerate");

    // t acts on Q^n = coker(tS - S^T) by S^{-1} S^T; class x corresponds to S^{-1} x.
    const RatMatrix sq = to_rational(s);
    const RatMatrix act = inverse<Rational>(sq) * to_rational(IntMatrix(s.transpose()));
    std::vector<RatVector> gens;
    std::vector<LaurentPoly> labels;
    for (const auto& [f, e] : fac.factors) {
        const Rational root = -f.coeff(f.low()) / f.coeff(f.high());
        RatVector v = kernel_vector(RatMatrix(act - root * RatMatrix::Identity(n, n)));
        gens.push_back(sq * v);
        labels.push_back(f);
    }

    // Bl(x_i, x_j) = (t-1) x_i^T adj(tS - S^T) x_j / det(tS - S^T) vanishes iff det divides the numerator.
    const poly::Poly det = seifert_determinant(s);
    std::vector<Rational> ts;
    for (long t = 2; static_cast<Eigen::Index>(ts.size()) < n; ++t)
        if (poly::eval(det, Rational(t)) != 0) ts.emplace_back(t);
    std::vector<RatMatrix> adj;
    for (const Rational& t : ts) {
        RatMatrix m = t * sq - sq.transpose();
        adj.push_back(poly::eval(det, t) * inverse<Rational>(m));
    }
    const auto nn = static_cast<std::size_t>(n);
    std::vector<std::vector<bool>> orth(nn, std::vector<bool>(nn));
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j) {
            std::vector<Rational> ys;
            for (const RatMatrix& a : adj) ys.push_back((gens[i].transpose() * a * gens[j])(0, 0));
            poly::Poly numer = poly::mul(poly::interpolate(ts, ys), poly::Poly{Rational(-1), Rational(1)});
            orth[i][j] = poly::divmod(numer, det).second.empty();
        }

    std::vector<Metabolizer> out;
    for (unsigned long mask = 0; mask < (1ul << nn); ++mask) {
        unsigned long perp = 0;
        for (std::size_t j = 0; j < nn; ++j) {
            bool ok = true;
            for (std::size_t i = 0; i < nn && ok; ++i)
                if ((mask >> i) & 1u) ok = orth[i][j];
            if (ok) perp |= 1ul << j;
        }
        if (perp != mask) continue;
        Metabolizer met;
        met.basis = RatMatrix(n, static_cast<Eigen::Index>(std::popcount(mask)));
        Eigen::Index col = 0;
        for (std::size_t i = 0; i < nn; ++i)
            if ((mask >> i) & 1u) {
                met.summands.push_back(labels[i]);
                met.basis.col(col++) = gens[i];
            }
        out.push_back(std::move(met));
    }
    return out;
}

std::optional<LaurentPoly> fox_milnor_factor(const LaurentPoly& delta) {
    if (delta.is_zero()) throw InputError("Fox-Milnor factor of the zero polynomial");
    const Factorization fac = factor_rational_poly(delta);
    LaurentPoly f(1);
    for (const auto& [p, e] : fac.factors) {
        if (is_self_dual(p)) {
            if (e % 2) return std::nullopt;
            f *= pow(p, static_cast<unsigned>(e / 2));
            continue;
        }
        auto partner = std::find_if(fac.factors.begin(), fac.factors.end(),
                                    [&](const auto& q) { return are_associates(q.first, star(p)); });
        if (partner == fac.factors.end() || partner->second != e) return std::nullopt;
        const LaurentPoly& q = partner->first;
        const Rational pl = mp::abs(p.leading()), pc = mp::abs(p.coeff(p.low()));
        const Rational ql = mp::abs(q.leading()), qc = mp::abs(q.coeff(q.low()));
        bool take = pl * qc != ql * pc ? pl * qc > ql * pc : p.to_string() < q.to_string();
        if (take) f *= pow(p, static_cast<unsigned>(e));
    }
    if (!are_associates(f * star(f), delta)) throw InvariantViolation("Fox-Milnor factor does not reconstruct");
    return canonical_associate(f);
}

CoverOrderReport cover_order_arithmetic(long m, long r, long prime_bound) {
    if (m < 1 || r < 2) throw InputError("cover order needs m >= 1 and r >= 2");
    CoverOrderReport rep;
    rep.u = power(Integer(m + 1), static_cast<unsigned>(r)) - power(Integer(m), static_cast<unsigned>(r));
    rep.odd = mod_floor(rep.u, Integer(2)) == 1;
    rep.r_prime = r >= 2;
    for (long f = 2; f * f <= r; ++f)
        if (r % f == 0) rep.r_prime = false;
    rep.cofactor = rep.u;
    std::vector<bool> composite(static_cast<std::size_t>(prime_bound + 1));
    for (long q = 2; q <= prime_bound; ++q) {
        if (composite[static_cast<std::size_t>(q)]) continue;
        for (long x = q * q; x <= prime_bound; x += q) composite[static_cast<std::size_t>(x)] = true;
        if (rep.cofactor % q != 0) continue;
        PrimeReport pr;
        pr.q = q;
        while (rep.cofactor % q == 0) {
            rep.cofactor /= q;
            ++pr.exponent;
        }
        pr.coprime_to_m_m1 = m % q != 0 && (m + 1) % q != 0;
        pr.r_divides_q_minus_1 = (q - 1) % r == 0;
        if (rep.r_prime && pr.coprime_to_m_m1 && !pr.r_divides_q_minus_1) rep.fermat_check = false;
        rep.primes.push_back(pr);
    }
    return rep;
}

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out = IntMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

IntMatrix trefoil_seifert() { return int_matrix({{-1, 1}, {0, -1}}); }

}  // namespace concord
