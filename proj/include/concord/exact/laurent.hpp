#pragma once

#include "concord/exact/poly.hpp"
#include "concord/exact/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace concord {

/// Finitely supported Laurent polynomial in t over Q. Zero coefficients are never stored.
class LaurentPoly {
public:
    using Terms = std::map<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}
    explicit LaurentPoly(Terms terms);

    static LaurentPoly monomial(const Rational& c, int exponent);
    static LaurentPoly t() { return monomial(Rational(1), 1); }
    /// Coefficients ascending from t^low.
    static LaurentPoly from_poly(const poly::Poly& p, int low = 0);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    bool is_monomial() const { return terms_.size() == 1; }
    int low() const;   // requires nonzero
    int high() const;  // requires nonzero
    int span() const { return is_zero() ? -1 : high() - low(); }
    Rational coeff(int e) const;
    Rational leading() const { return terms_.rbegin()->second; }

    /// Polynomial part after shifting the lowest exponent to 0.
    poly::Poly poly_part() const;
    LaurentPoly shifted(int k) const;
    Rational eval(const Rational& x) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    Terms terms_;
};

/// t^i -> t^{-i}.
LaurentPoly star(const LaurentPoly& f);
LaurentPoly pow(LaurentPoly f, unsigned k);

/// Shift to lowest exponent 0, clear to a primitive integer polynomial, positive leading coefficient.
LaurentPoly canonical_associate(const LaurentPoly& f);
/// f = u * g for a unit u = c t^k of Q[t^{+-1}].
bool are_associates(const LaurentPoly& f, const LaurentPoly& g);
/// f is an associate of g or of g*.
bool are_star_associates(const LaurentPoly& f, const LaurentPoly& g);
bool is_self_dual(const LaurentPoly& f);

/// Quotient f/g in Q[t^{+-1}] when g divides f there.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g);
/// Canonical gcd in Q[t^{+-1}].
LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g);

/// Sylvester resultant of the polynomial parts; rejects zero input.
Rational resultant(const LaurentPoly& f, const LaurentPoly& g);

/// n-th cyclotomic polynomial.
LaurentPoly cyclotomic(int n);

struct Factorization {
    Rational unit_coeff{1};
    int unit_exponent = 0;
    std::vector<std::pair<LaurentPoly, int>> factors;  // canonical associates, sorted

    LaurentPoly expand() const;
};

/// Factorization over Q by rational roots and Kronecker's method. Throws CapabilityError
/// above max_degree or when the Kronecker search exceeds its candidate budget.
Factorization factor_rational_poly(const LaurentPoly& f, int max_degree = 16);

bool is_irreducible(const LaurentPoly& f, int max_degree = 16);

}  // namespace concord
