#pragma once

#include "concord/exact/laurent.hpp"
#include "concord/exact/scalar.hpp"

#include <random>

namespace testsupport {

using namespace concord;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed1234ULL);
    return g;
}

inline long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline IntMatrix random_matrix(Eigen::Index r, Eigen::Index c, long lo, long hi) {
    IntMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = uniform(lo, hi);
    return m;
}

inline IntMatrix random_symmetric(Eigen::Index n, long lo, long hi) {
    IntMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j) m(i, j) = m(j, i) = uniform(lo, hi);
    return m;
}

inline LaurentPoly random_poly(int degree, long lo, long hi) {
    poly::Poly p;
    for (int i = 0; i <= degree; ++i) p.emplace_back(uniform(lo, hi));
    if (p.back() == 0) p.back() = 1;
    return LaurentPoly::from_poly(p);
}

inline LaurentPoly lp(std::initializer_list<std::pair<int, long>> terms) {
    LaurentPoly::Terms t;
    for (auto [e, c] : terms) t[e] = Rational(c);
    return LaurentPoly(t);
}

inline Rational q(long a, long b = 1) { return Rational(a, b); }

}  // namespace testsupport
