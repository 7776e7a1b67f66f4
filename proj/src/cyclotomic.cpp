#include "concord/exact/cyclotomic.hpp"

#include "concord/errors.hpp"
#include "concord/exact/laurent.hpp"

#include <mpfr.h>

#include <cmath>

namespace concord {

namespace {

using poly::Poly;

const std::shared_ptr<const CyclotomicContext>& pick(const Cyclo& a, const Cyclo& b) {
    if (a.context() && b.context() && a.context()->d != b.context()->d)
        throw InvariantViolation("mixing elements of different cyclotomic fields");
    return a.context() ? a.context() : b.context();
}

Poly reduce(Poly p, const std::shared_ptr<const CyclotomicContext>& ctx) {
    poly::trim(p);
    if (!ctx || poly::degree(p) < ctx->degree) return p;
    return poly::divmod(p, ctx->phi).second;
}

// s, with s*a = g (mod b), for the extended Euclidean algorithm over Q[x].
Poly inverse_mod(const Poly& a, const Poly& b) {
    Poly r0 = b, r1 = a, s0, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = poly::divmod(r0, r1);
        Poly s2 = poly::sub(s0, poly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (poly::degree(r0) != 0) throw InvariantViolation("cyclotomic inverse of a zero divisor");
    return poly::scale(s0, Rational(1) / r0[0]);
}

struct MpfrValue {
    mpfr_t v;
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~MpfrValue() { mpfr_clear(v); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
};

void set_rational(mpfr_t out, const Rational& q) {
    mpfr_set_q(out, q.backend().data(), MPFR_RNDN);
}

// Sum c_j cos(2 pi j / d) at the given precision, and a bound on its absolute error.
std::pair<double, bool> evaluate_real(const Cyclo& x, mpfr_prec_t prec, int& sign_out) {
    const long d = x.context() ? x.context()->d : 1;
    MpfrValue sum(prec), term(prec), angle(prec), coef(prec);
    mpfr_set_zero(sum.v, 1);
    Rational weight(0);
    for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
        const Rational& c = x.coeffs()[j];
        if (c == 0) continue;
        weight += mp::abs(c);
        mpfr_const_pi(angle.v, MPFR_RNDN);
        mpfr_mul_si(angle.v, angle.v, 2 * static_cast<long>(j), MPFR_RNDN);
        mpfr_div_si(angle.v, angle.v, d, MPFR_RNDN);
        mpfr_cos(term.v, angle.v, MPFR_RNDN);
        set_rational(coef.v, c);
        mpfr_mul(term.v, term.v, coef.v, MPFR_RNDN);
        mpfr_add(sum.v, sum.v, term.v, MPFR_RNDN);
    }
    // Each term is off by at most about 16 ulps of its coefficient; the sum adds one ulp per step.
    MpfrValue err(prec), w(prec);
    set_rational(w.v, weight);
    mpfr_mul_2si(err.v, w.v, -static_cast<long>(prec) + 8 + static_cast<long>(std::log2(x.coeffs().size() + 1)),
                 MPFR_RNDU);
    MpfrValue mag(prec);
    mpfr_abs(mag.v, sum.v, MPFR_RNDN);
    const bool decided = mpfr_cmp(mag.v, err.v) > 0;
    sign_out = mpfr_sgn(sum.v);
    return {mpfr_get_d(sum.v, MPFR_RNDN), decided};
}

}  // namespace

std::shared_ptr<const CyclotomicContext> cyclotomic_field(long d) {
    if (d < 1) throw InputError("cyclotomic field needs d >= 1");
    Poly phi = cyclotomic(static_cast<int>(d)).poly_part();
    const int deg = poly::degree(phi);
    return std::make_shared<const CyclotomicContext>(CyclotomicContext{d, std::move(phi), deg});
}

Cyclo::Cyclo(const Rational& c) {
    if (c != 0) c_ = {c};
}

Cyclo::Cyclo(std::shared_ptr<const CyclotomicContext> ctx, Poly coeffs) : ctx_(std::move(ctx)) {
    c_ = reduce(std::move(coeffs), ctx_);
}

Cyclo Cyclo::zeta(const std::shared_ptr<const CyclotomicContext>& ctx, long k) {
    k = static_cast<long>(mod_floor(Integer(k), Integer(ctx->d)));
    Poly p(static_cast<std::size_t>(k + 1));
    p[static_cast<std::size_t>(k)] = 1;
    return Cyclo(ctx, std::move(p));
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    const auto& ctx = pick(a, b);
    return Cyclo(ctx, poly::add(a.c_, b.c_));
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    const auto& ctx = pick(a, b);
    return Cyclo(ctx, poly::sub(a.c_, b.c_));
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    const auto& ctx = pick(a, b);
    return Cyclo(ctx, poly::mul(a.c_, b.c_));
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

Cyclo Cyclo::inverse() const {
    if (c_.empty()) throw InvariantViolation("division by zero in a cyclotomic field");
    if (is_rational()) {
        Cyclo r(Rational(1) / c_[0]);
        r.ctx_ = ctx_;
        return r;
    }
    return Cyclo(ctx_, inverse_mod(c_, ctx_->phi));
}

std::string Cyclo::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!out.empty()) out += " + ";
        out += "(" + concord::to_string(c_[j]) + ")";
        if (j > 0) out += "z^" + std::to_string(j);
    }
    return out;
}

Cyclo conjugate(const Cyclo& x) {
    if (x.is_rational() || !x.context()) return x;
    const long d = x.context()->d;
    Poly p(static_cast<std::size_t>(d));
    for (std::size_t j = 0; j < x.coeffs().size(); ++j) p[static_cast<std::size_t>((d - static_cast<long>(j)) % d)] += x.coeffs()[j];
    return Cyclo(x.context(), std::move(p));
}

int real_sign(const Cyclo& x) {
    if (x.is_rational()) return sign(x.rational_part());
    for (mpfr_prec_t prec = 128; prec <= (1 << 20); prec *= 2) {
        int s = 0;
        if (evaluate_real(x, prec, s).second) return s;
    }
    throw CapabilityError("real_sign: precision limit reached for " + x.to_string());
}

double approx_real(const Cyclo& x) {
    int s = 0;
    return evaluate_real(x, 64, s).first;
}

}  // namespace concord
