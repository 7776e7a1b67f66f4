#include "support.hpp"

#include "concord/errors.hpp"
#include "concord/exact/linalg.hpp"
#include "concord/families.hpp"
#include "concord/plumbing.hpp"

#include <doctest.h>

using namespace concord;
using namespace testsupport;
using families::minus_b_graph;
using families::y_graph;

TEST_CASE("continued fractions") {
    CHECK(cf_value({2, 2, 2, 2, 2, 2}) == q(7, 6));
    CHECK(cf_value({3}) == q(3));
    CHECK(cf_value({2, 3}) == q(5, 3));
    CHECK_THROWS_AS(cf_value({}), CapabilityError);
    CHECK_THROWS_AS(cf_value({1, 3}), InputError);
    for (long p = 2; p < 40; ++p)
        for (long qq = 1; qq < p; ++qq) {
            if (std::gcd(p, qq) != 1) continue;
            auto hj = hirzebruch_jung(q(p, qq));
            for (long x : hj) CHECK(x >= 2);
            CHECK(cf_value(hj) == q(p, qq));
        }
}

TEST_CASE("branch data tables") {
    BranchData b = branch_data({-2, -3, -4});
    CHECK(Rational(b.alpha, b.omega) == cf_value({2, 3, 4}));
    CHECK(b.n(1, 3) == b.alpha);
    CHECK(b.d(1, 3) == b.omega);
    CHECK(b.n(4, 3) == 1);
    CHECK(Rational(b.n(2, 3), b.d(2, 3)) == cf_value({3, 4}));
    CHECK(b.n(3, 3) == 4);
}

TEST_CASE("intersection forms") {
    PlumbingGraph star{-2, {{-2}, {-2}, {-2}}};
    IntMatrix s = intersection_form(star);
    CHECK(s.diagonal() == IntVector::Constant(4, Integer(-2)));
    CHECK(s(0, 1) == 1);
    CHECK(s(1, 2) == 0);

    const long m = 3;
    IntMatrix y = intersection_form(y_graph(m));
    REQUIRE(y.rows() == 2 * m + 4);
    // root row: 1 at the first vertex of each branch
    CHECK(y(0, 1) == 1);
    CHECK(y(0, 2 * m + 1) == 1);
    CHECK(y(0, 2 * m + 2) == 1);
    CHECK(y(0, 2 * m + 3) == 1);
    CHECK(y(0, 2) == 0);
    CHECK(y(2 * m + 3, 2 * m + 3) == -(m + 1));
    CHECK(y(2 * m + 2, 2 * m + 2) == -3);
    for (long j = 1; j < 2 * m; ++j) CHECK(y(j, j + 1) == 1);
    CHECK(y(2 * m, 2 * m + 1) == 0);
    CHECK(is_symmetric(y));

    IntMatrix b = intersection_form(minus_b_graph(m));
    CHECK(b.rows() == 2 * m);
    CHECK(b(2 * m - 1, 2 * m - 1) == -7);

    CHECK_THROWS_AS(intersection_form(PlumbingGraph{-2, {{-2}, {-2}}}), InputError);
    CHECK_THROWS_AS(intersection_form(PlumbingGraph{-2, {{-2}, {-1}, {-2}}}), InputError);
}

TEST_CASE("orbifold Euler number and definiteness") {
    CHECK(orbifold_euler(y_graph(3)) == q(-5, 84));
    CHECK(orbifold_euler(minus_b_graph(3)) == q(-17, 28));
    PlumbingGraph pos{-1, {{-2}, {-2}, {-2}}};
    CHECK(orbifold_euler(pos) == q(1, 2));
    CHECK(is_negative_definite(y_graph(3)));
    CHECK(is_negative_definite(minus_b_graph(3)));
    CHECK_FALSE(is_negative_definite(pos));
}

TEST_CASE("determinant identity on the paper families") {
    for (long m = 3; m <= 35; m += 2) {
        for (const auto& g : {y_graph(m), minus_b_graph(m)}) {
            Rational prod(1);
            for (const auto& b : branch_data(g)) prod *= Rational(b.alpha);
            Rational e = orbifold_euler(g);
            CHECK(Rational(mp::abs(determinant(intersection_form(g)))) == mp::abs(e) * prod);
        }
        CHECK(mp::abs(determinant(intersection_form(y_graph(m)))) == (m - 1) * (2 * m - 1));
    }
}

TEST_CASE("determinant identity on random star graphs") {
    for (int trial = 0; trial < 80; ++trial) {
        PlumbingGraph g{-uniform(1, 4), {}};
        const auto nu = uniform(3, 5);
        for (long l = 0; l < nu; ++l) {
            std::vector<long> chain;
            for (long j = uniform(1, 3); j > 0; --j) chain.push_back(-uniform(2, 5));
            g.branches.push_back(chain);
        }
        Rational prod(1);
        for (const auto& b : branch_data(g)) {
            prod *= Rational(b.alpha);
            CHECK(b.omega < b.alpha);
            CHECK(b.omega >= 0);
        }
        CHECK(Rational(mp::abs(determinant(intersection_form(g)))) == mp::abs(orbifold_euler(g)) * prod);
        if (orbifold_euler(g) != 0) CHECK_NOTHROW(is_negative_definite(g));
    }
}
