#pragma once

#include "concord/exact/scalar.hpp"

#include <utility>
#include <vector>

// Dense univariate polynomials over Q, coefficients in ascending order.
namespace concord::poly {

using Poly = std::vector<Rational>;

void trim(Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);  // monic, zero if both zero
Poly derivative(const Poly& p);
Rational eval(const Poly& p, const Rational& x);
// Lagrange interpolation through distinct points.
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Number of distinct real roots in the half-open interval (a, b], via a Sturm chain.
int count_real_roots(const Poly& p, const Rational& a, const Rational& b);

/// Disjoint isolating intervals (a_i, b_i] for the distinct real roots of p, in increasing order.
/// Endpoints are never roots; each interval is narrower than width.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Poly& p, const Rational& width);

/// Cauchy bound: every complex root has |z| < bound.
Rational root_bound(const Poly& p);

}  // namespace concord::poly
