#pragma once

#include "concord/exact/poly.hpp"
#include "concord/exact/scalar.hpp"

#include <memory>
#include <string>

namespace concord {

/// Q(zeta_d) = Q[x]/Phi_d(x), with zeta_d embedded as exp(2 pi i / d).
struct CyclotomicContext {
    long d;
    poly::Poly phi;
    int degree;
};

std::shared_ptr<const CyclotomicContext> cyclotomic_field(long d);

/// Element of a cyclotomic field. Default-constructed and integer-constructed values are
/// rational constants without a field attached; they adopt the field of the other operand.
class Cyclo {
public:
    Cyclo() = default;
    Cyclo(int c) : Cyclo(Rational(c)) {}  // NOLINT
    Cyclo(const Rational& c);             // NOLINT
    Cyclo(std::shared_ptr<const CyclotomicContext> ctx, poly::Poly coeffs);

    /// zeta_d^k.
    static Cyclo zeta(const std::shared_ptr<const CyclotomicContext>& ctx, long k);

    const poly::Poly& coeffs() const { return c_; }
    const std::shared_ptr<const CyclotomicContext>& context() const { return ctx_; }
    bool is_rational() const { return c_.size() <= 1; }
    Rational rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

    Cyclo operator-() const;
    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }
    bool operator==(const Cyclo& o) const { return c_ == o.c_; }

    Cyclo inverse() const;
    std::string to_string() const;

private:
    std::shared_ptr<const CyclotomicContext> ctx_;
    poly::Poly c_;  // reduced modulo phi, trimmed
};

/// Complex conjugation, zeta -> zeta^{-1}.
Cyclo conjugate(const Cyclo& x);

/// Sign of a self-conjugate element under the distinguished embedding, decided by
/// MPFR evaluation with an explicit error bound and increasing precision.
int real_sign(const Cyclo& x);

/// Numerical value of the real part under the distinguished embedding (for reporting).
double approx_real(const Cyclo& x);

}  // namespace concord

namespace Eigen {
template <>
struct NumTraits<concord::Cyclo> : GenericNumTraits<concord::Cyclo> {
    using Real = concord::Cyclo;
    using NonInteger = concord::Cyclo;
    using Nested = concord::Cyclo;
    using Literal = concord::Cyclo;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 20,
        MulCost = 60
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};
}  // namespace Eigen
