#include "support.hpp"

#include "concord/errors.hpp"
#include "concord/exact/cyclotomic.hpp"
#include "concord/exact/linalg.hpp"
#include "concord/families.hpp"
#include "concord/knots.hpp"

#include <Eigen/Eigenvalues>
#include <doctest.h>

#include <complex>
#include <numbers>

using namespace concord;
using namespace testsupport;

namespace {

// Laplace expansion over Laurent polynomials.
LaurentPoly laplace_det(const std::vector<std::vector<LaurentPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly(1);
    LaurentPoly sum;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<LaurentPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<LaurentPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        LaurentPoly term = m[0][c] * laplace_det(minor);
        sum += c % 2 ? -term : term;
    }
    return sum;
}

LaurentPoly alexander_oracle(const IntMatrix& s) {
    const auto n = static_cast<std::size_t>(s.rows());
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = LaurentPoly::monomial(Rational(s(Eigen::Index(i), Eigen::Index(j))), 1) -
                      LaurentPoly(Rational(s(Eigen::Index(j), Eigen::Index(i))));
    return laplace_det(m);
}

// Random Seifert matrix: a symplectic block sum plus a symmetric perturbation, then a unimodular change of basis.
IntMatrix random_seifert(Eigen::Index g, long spread = 2) {
    IntMatrix s = IntMatrix::Zero(2 * g, 2 * g);
    for (Eigen::Index i = 0; i < g; ++i) s(2 * i, 2 * i + 1) = 1;
    s += random_symmetric(2 * g, -spread, spread);
    IntMatrix p = IntMatrix::Identity(2 * g, 2 * g);
    for (int step = 0; step < 3; ++step) {
        const auto i = uniform(0, 2 * g - 1), j = uniform(0, 2 * g - 1);
        if (i == j) continue;
        IntMatrix e = IntMatrix::Identity(2 * g, 2 * g);
        e(i, j) = uniform(-1, 1);
        p = p * e;
    }
    return IntMatrix(p.transpose() * s * p);
}

// Signature by floating-point eigenvalues; nullopt when too close to singular.
std::optional<int> float_signature(const IntMatrix& s, double theta) {
    using C = std::complex<double>;
    const Eigen::Index n = s.rows();
    const C w = std::polar(1.0, theta);
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            a(i, j) = (C(1) - w) * s(i, j).convert_to<double>() + (C(1) - std::conj(w)) * s(j, i).convert_to<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
    int sig = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double ev = es.eigenvalues()(i);
        if (std::abs(ev) < 1e-7) return std::nullopt;
        sig += ev > 0 ? 1 : -1;
    }
    return sig;
}

double angle(long k, long d) { return 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d); }

}  // namespace

TEST_CASE("cyclotomic field arithmetic") {
    auto f = cyclotomic_field(12);
    CHECK(f->degree == 4);
    Cyclo z = Cyclo::zeta(f, 1);
    Cyclo acc(1);
    for (int i = 0; i < 12; ++i) acc *= z;
    CHECK(acc == Cyclo(1));
    CHECK(z * conjugate(z) == Cyclo(1));
    Cyclo x = Cyclo(3) + z - Cyclo::zeta(f, 5) * Cyclo(Rational(2, 7));
    CHECK(x * x.inverse() == Cyclo(1));
    // z + z^-1 = 2 cos(pi/6) = sqrt 3
    Cyclo r = z + conjugate(z);
    CHECK(r * r == Cyclo(3));
    CHECK(real_sign(r) == 1);
    CHECK(real_sign(Cyclo(2) - r) == 1);
    CHECK(real_sign(r - Cyclo(Rational(17321, 10000))) == -1);
    CHECK(real_sign(r - Cyclo(Rational(17320, 10000))) == 1);
    auto g = cyclotomic_field(7);
    Cyclo c = Cyclo::zeta(g, 1) + Cyclo::zeta(g, 6);
    CHECK(real_sign(c - Cyclo(Rational(1246979603717467, 1000000000000000))) == 1);
    CHECK(real_sign(c - Cyclo(Rational(1246979603717468, 1000000000000000))) == -1);
    CHECK_THROWS_AS(Cyclo::zeta(f, 1) + Cyclo::zeta(g, 1), InvariantViolation);
}

TEST_CASE("Alexander polynomial examples") {
    CHECK(alexander_polynomial(families::seifert_matrix(3)) == lp({{-1, -12}, {0, 25}, {1, -12}}));
    CHECK(are_associates(alexander_polynomial(families::seifert_matrix(3)),
                         families::lambda_poly(3) * star(families::lambda_poly(3))));
    CHECK(alexander_polynomial(trefoil_seifert()) == lp({{-1, 1}, {0, -1}, {1, 1}}));
    CHECK(alexander_polynomial(IntMatrix(0, 0)) == LaurentPoly(1));
    for (long m = 1; m <= 13; ++m) {
        LaurentPoly l = families::lambda_poly(m);
        CHECK(are_associates(alexander_polynomial(families::seifert_matrix(m)), l * star(l)));
    }
    CHECK_THROWS_AS(alexander_polynomial(int_matrix({{1, 2}, {4, 4}})), InputError);
    CHECK_THROWS_AS(alexander_polynomial(int_matrix({{1}})), InputError);
}

TEST_CASE("Alexander polynomial properties on random Seifert matrices") {
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix s = random_seifert(uniform(1, 3));
        LaurentPoly d = alexander_polynomial(s);
        CHECK(d == star(d));
        CHECK(d.eval(Rational(1)) == 1);
        CHECK(are_associates(d, alexander_oracle(s)));
    }
}

TEST_CASE("Levine-Tristram signature examples") {
    const IntMatrix tre = trefoil_seifert();
    CHECK(lt_signature(tre, 1, 2) == -2);
    CHECK(lt_signature(tre, 0, 5) == 0);
    CHECK(lt_signature(tre, 1, 6) == -1);  // zero of t^2 - t + 1
    CHECK(lt_signature(tre, 5, 6) == -1);
    CHECK(lt_signature(tre, 1, 12) == 0);
    CHECK(lt_signature(tre, 5, 12) == -2);
    for (long m = 1; m <= 13; ++m) CHECK(lt_signature(families::seifert_matrix(m), 1, 2) == 0);
    CHECK(lt_signature(IntMatrix(0, 0), 1, 3) == 0);
    CHECK_THROWS_AS(lt_signature(tre, 3, 3), InputError);
    CHECK_THROWS_AS(lt_signature(tre, -1, 3), InputError);
}

TEST_CASE("Levine-Tristram signatures against floating point and the Cayley route") {
    for (int trial = 0; trial < 25; ++trial) {
        IntMatrix s = random_seifert(uniform(1, 2));
        const long d = uniform(2, 12);
        for (long k = 0; k < d; ++k) {
            const int sig = lt_signature(s, k, d);
            CHECK(sig == lt_signature_cayley(s, k, d));
            if (k > 0) CHECK(sig == lt_signature(s, d - k, d));
            if (auto fl = float_signature(s, angle(k, d)); fl && k > 0) CHECK(sig == *fl);
        }
    }
}

TEST_CASE("jump points average the one-sided limits") {
    // The torus knot T(2,5) has Delta zero at primitive 10th roots of unity.
    IntMatrix t25 = int_matrix({{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}});
    CHECK(are_associates(alexander_polynomial(t25), cyclotomic(10)));
    for (long k : {1L, 3L, 7L, 9L}) {
        const double eps = 1e-6;
        auto lo = float_signature(t25, angle(k, 10) - eps), hi = float_signature(t25, angle(k, 10) + eps);
        REQUIRE(lo);
        REQUIRE(hi);
        CHECK(lt_signature(t25, k, 10) * 2 == *lo + *hi);
    }
    CHECK(lt_signature(t25, 1, 2) == -4);
    // a trefoil summand puts jumps at the primitive sixth roots of unity
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix s = block_sum(trefoil_seifert(), random_seifert(1));
        for (long k = 1; k < 6; ++k) {
            auto lo = float_signature(s, angle(k, 6) - 1e-6), hi = float_signature(s, angle(k, 6) + 1e-6);
            if (!lo || !hi) continue;
            CHECK(lt_signature(s, k, 6) * 2 == *lo + *hi);
        }
    }
}

TEST_CASE("rho invariants") {
    const IntMatrix tre = trefoil_seifert();
    CHECK(rho_zd(tre, 2) == -1);
    CHECK(rho_zd(IntMatrix(0, 0), 7) == 0);
    CHECK(rho_zd(tre, 1) == 0);
    IntMatrix sum(0, 0);
    for (int c = 1; c <= 4; ++c) {
        sum = block_sum(sum, tre);
        CHECK(rho_zd(sum, 2) == -c);
    }
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix a = random_seifert(1), b = random_seifert(uniform(1, 2));
        const long d = uniform(2, 9);
        CHECK(rho_zd(block_sum(a, b), d) == rho_zd(a, d) + rho_zd(b, d));
    }
    CHECK_THROWS_AS(rho_zd(tre, 0), InputError);
}

TEST_CASE("branched cover homology") {
    CHECK(branched_cover_homology(trefoil_seifert(), 2).to_string() == "Z/3");
    CHECK(branched_cover_homology(trefoil_seifert(), 3).to_string() == "Z/2 + Z/2");
    CHECK(branched_cover_homology(trefoil_seifert(), 6).free_rank == 2);
    CHECK(branched_cover_homology(families::seifert_matrix(1), 2).to_string() == "Z/3 + Z/3");
    CHECK(branched_cover_homology(IntMatrix(0, 0), 5).is_trivial());
    for (long m = 1; m <= 13; m += 2)
        for (long r : {2L, 3L, 5L}) {
            const Integer u = power(Integer(m + 1), unsigned(r)) - power(Integer(m), unsigned(r));
            CHECK(branched_cover_homology(families::seifert_matrix(m), r) == AbelianGroup{{u, u}, 0});
        }
    CHECK_THROWS_AS(branched_cover_homology(trefoil_seifert(), 1), InputError);
}

TEST_CASE("branched cover orders match resultants") {
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix s = random_seifert(uniform(1, 2));
        const long r = std::vector<long>{2, 3, 5}[std::size_t(trial % 3)];
        poly::Poly geo(std::size_t(r), Rational(1));
        const Rational res = resultant(alexander_polynomial(s), LaurentPoly::from_poly(geo));
        AbelianGroup h = branched_cover_homology(s, r);
        if (res == 0) {
            CHECK(h.free_rank > 0);
        } else {
            REQUIRE(h.is_finite());
            CHECK(Rational(h.order()) == mp::abs(res));
        }
    }
}

TEST_CASE("Blanchfield metabolizers") {
    for (long m : {1L, 3L, 5L, 13L}) {
        auto mets = blanchfield_metabolizers(families::seifert_matrix(m));
        REQUIRE(mets.size() == 2);
        std::vector<LaurentPoly> got{mets[0].summands.at(0), mets[1].summands.at(0)};
        const LaurentPoly l = canonical_associate(families::lambda_poly(m)), ls = canonical_associate(star(l));
        CHECK(std::count(got.begin(), got.end(), l) == 1);
        CHECK(std::count(got.begin(), got.end(), ls) == 1);
        for (const auto& met : mets) CHECK(met.basis.cols() == 1);
    }
    auto unknot = blanchfield_metabolizers(IntMatrix(0, 0));
    REQUIRE(unknot.size() == 1);
    CHECK(unknot[0].summands.empty());
    CHECK_THROWS_AS(blanchfield_metabolizers(trefoil_seifert()), CapabilityError);
    // two pairs of summands: choose one side of each pair
    IntMatrix two = block_sum(families::seifert_matrix(1), families::seifert_matrix(2));
    CHECK(blanchfield_metabolizers(two).size() == 4);
    IntMatrix p = IntMatrix::Identity(4, 4);
    p(0, 2) = 1;
    p(3, 1) = -2;
    CHECK(blanchfield_metabolizers(IntMatrix(p.transpose() * two * p)).size() == 4);
}

TEST_CASE("Fox-Milnor factors") {
    auto f = fox_milnor_factor(lp({{-1, -12}, {0, 25}, {1, -12}}));
    REQUIRE(f);
    CHECK(*f == lp({{0, -3}, {1, 4}}));
    CHECK(fox_milnor_factor(LaurentPoly(1)) == LaurentPoly(1));
    CHECK_FALSE(fox_milnor_factor(lp({{-1, 1}, {0, -3}, {1, 1}})));
    CHECK_FALSE(fox_milnor_factor(alexander_polynomial(trefoil_seifert())));
    const LaurentPoly tre = alexander_polynomial(trefoil_seifert());
    auto sq = fox_milnor_factor(tre * tre);
    REQUIRE(sq);
    CHECK(are_associates(*sq, tre));
    for (long m = 1; m <= 13; ++m) {
        auto g = fox_milnor_factor(alexander_polynomial(families::seifert_matrix(m)));
        REQUIRE(g);
        CHECK(are_associates(*g, families::lambda_poly(m)));
    }
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly h = random_poly(int(uniform(1, 3)), -4, 4);
        if (h.eval(Rational(0)) == 0) continue;
        auto g = fox_milnor_factor(h * star(h));
        REQUIRE(g);
        CHECK(are_associates(*g * star(*g), h * star(h)));
    }
    CHECK_THROWS_AS(fox_milnor_factor(LaurentPoly()), InputError);
}

TEST_CASE("cover order arithmetic") {
    auto a = cover_order_arithmetic(3, 2);
    CHECK(a.u == 7);
    CHECK(a.odd);
    CHECK(cover_order_arithmetic(1, 2).u == 3);
    auto b = cover_order_arithmetic(3, 5);
    CHECK(b.u == 781);
    REQUIRE(b.primes.size() == 2);
    CHECK(b.primes[0].q == 11);
    CHECK(b.primes[1].q == 71);
    CHECK(b.fermat_check);
    CHECK(b.cofactor == 1);
    for (long m = 1; m <= 13; m += 2)
        for (long r : {2L, 3L, 5L, 7L}) {
            auto rep = cover_order_arithmetic(m, r, 100000);
            CHECK(rep.fermat_check);
            CHECK(rep.odd);
        }
    CHECK_FALSE(cover_order_arithmetic(2, 4).r_prime);
    CHECK_THROWS_AS(cover_order_arithmetic(0, 2), InputError);
}
