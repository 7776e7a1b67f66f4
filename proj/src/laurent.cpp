#include "concord/exact/laurent.hpp"

#include "concord/errors.hpp"
#include "concord/exact/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace concord {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
    return LaurentPoly(Terms{{exponent, c}});
}

LaurentPoly LaurentPoly::from_poly(const poly::Poly& p, int low) {
    Terms t;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) t[low + static_cast<int>(i)] = p[i];
    return LaurentPoly(std::move(t));
}

int LaurentPoly::low() const {
    if (is_zero()) throw InputError("low exponent of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::high() const {
    if (is_zero()) throw InputError("high exponent of zero polynomial");
    return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

poly::Poly LaurentPoly::poly_part() const {
    if (is_zero()) return {};
    poly::Poly p(static_cast<std::size_t>(span() + 1));
    for (const auto& [e, c] : terms_) p[static_cast<std::size_t>(e - low())] = c;
    return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    Terms t;
    for (const auto& [e, c] : terms_) t[e + k] = c;
    return LaurentPoly(std::move(t));
}

Rational LaurentPoly::eval(const Rational& x) const {
    Rational v(0);
    for (const auto& [e, c] : terms_) {
        if (e < 0 && x == 0) throw InputError("evaluating negative power at 0");
        Rational p = power(x, static_cast<unsigned>(std::abs(e)));
        v += c * (e < 0 ? Rational(1) / p : p);
    }
    return v;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        Rational& x = terms_[e];
        x += c;
        if (x == 0) terms_.erase(e);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    Terms t;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) t[e1 + e2] += c1 * c2;
    *this = LaurentPoly(std::move(t));
    return *this;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c < 0 ? Rational(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << concord::to_string(a);
            continue;
        }
        if (a != 1) os << concord::to_string(a);
        os << "t";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentPoly star(const LaurentPoly& f) {
    LaurentPoly::Terms t;
    for (const auto& [e, c] : f.terms()) t[-e] = c;
    return LaurentPoly(std::move(t));
}

LaurentPoly pow(LaurentPoly f, unsigned k) {
    LaurentPoly r(1);
    while (k) {
        if (k & 1) r *= f;
        f *= f;
        k >>= 1;
    }
    return r;
}

LaurentPoly canonical_associate(const LaurentPoly& f) {
    if (f.is_zero()) return f;
    LaurentPoly g = f.shifted(-f.low());
    Integer l(1), c(0);
    for (const auto& [e, a] : g.terms()) l = mp::lcm(l, den(a));
    for (const auto& [e, a] : g.terms()) c = mp::gcd(c, num(a * l));
    Rational s = Rational(l) / c;
    if (g.leading() < 0) s = -s;
    return g * LaurentPoly(s);
}

bool are_associates(const LaurentPoly& f, const LaurentPoly& g) {
    return canonical_associate(f) == canonical_associate(g);
}

bool are_star_associates(const LaurentPoly& f, const LaurentPoly& g) {
    return are_associates(f, g) || are_associates(star(f), g);
}

bool is_self_dual(const LaurentPoly& f) { return are_associates(f, star(f)); }

std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw InputError("division by zero polynomial");
    if (f.is_zero()) return LaurentPoly();
    auto [q, r] = poly::divmod(f.poly_part(), g.poly_part());
    if (!r.empty()) return std::nullopt;
    return LaurentPoly::from_poly(q, f.low() - g.low());
}

LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero()) return canonical_associate(g);
    if (g.is_zero()) return canonical_associate(f);
    return canonical_associate(LaurentPoly::from_poly(poly::gcd(f.poly_part(), g.poly_part())));
}

Rational resultant(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() || g.is_zero()) throw InputError("resultant of zero polynomial");
    const poly::Poly a = f.poly_part(), b = g.poly_part();
    const int m = poly::degree(a), n = poly::degree(b);
    if (m + n == 0) return Rational(1);
    RatMatrix s = RatMatrix::Zero(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s(i, i + j) = a[static_cast<std::size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s(n + i, i + j) = b[static_cast<std::size_t>(n - j)];
    return determinant<Rational>(s);
}

LaurentPoly cyclotomic(int n) {
    if (n < 1) throw InputError("cyclotomic index must be positive");
    poly::Poly p(static_cast<std::size_t>(n + 1));
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly::divmod(p, cyclotomic(d).poly_part()).first;
    return LaurentPoly::from_poly(p);
}

LaurentPoly Factorization::expand() const {
    LaurentPoly r = LaurentPoly::monomial(unit_coeff, unit_exponent);
    for (const auto& [f, k] : factors) r *= pow(f, static_cast<unsigned>(k));
    return r;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Integer polynomial (ascending) with integral, primitive coefficients.
bool is_integral(const poly::Poly& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return den(c) == 1; });
}

constexpr long kKroneckerBudget = 2'000'000;

// Finds a factor of primitive integer p with degree exactly k, or returns empty.
poly::Poly kronecker_factor(const poly::Poly& p, int k) {
    const int n = poly::degree(p);
    // pick k+1 evaluation points with the fewest divisor choices
    std::vector<std::pair<std::size_t, long>> scored;
    for (long x = -24; x <= 24; ++x) {
        Rational v = poly::eval(p, Rational(x));
        if (v == 0 || mp::abs(num(v)) > Integer(1'000'000'000'000LL)) continue;
        scored.emplace_back(positive_divisors(num(v)).size(), x);
    }
    std::sort(scored.begin(), scored.end());
    if (static_cast<int>(scored.size()) < k + 1) throw CapabilityError("too few evaluation points");
    std::vector<Rational> xs;
    std::vector<std::vector<Integer>> choices;
    double combos = 1;
    for (int i = 0; i <= k; ++i) {
        const long x = scored[static_cast<std::size_t>(i)].second;
        xs.emplace_back(x);
        auto d = positive_divisors(num(poly::eval(p, Rational(x))));
        std::vector<Integer> c;
        for (const auto& v : d) {
            c.push_back(v);
            if (i > 0) c.push_back(-v);  // overall sign of the factor is free
        }
        combos *= static_cast<double>(c.size());
        choices.push_back(std::move(c));
    }
    if (combos > kKroneckerBudget)
        throw CapabilityError("Kronecker search for degree-" + std::to_string(n) + " polynomial exceeds budget");
    std::vector<std::size_t> idx(choices.size(), 0);
    std::vector<Rational> ys(choices.size());
    for (;;) {
        for (std::size_t i = 0; i < idx.size(); ++i) ys[i] = Rational(choices[i][idx[i]]);
        poly::Poly q = poly::interpolate(xs, ys);
        if (poly::degree(q) == k && is_integral(q)) {
            auto [quot, rem] = poly::divmod(p, q);
            if (rem.empty() && is_integral(quot)) return q;
        }
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    return {};
}

}  // namespace

Factorization factor_rational_poly(const LaurentPoly& f, int max_degree) {
    if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
    if (f.span() > max_degree)
        throw CapabilityError("degree " + std::to_string(f.span()) + " exceeds factorization bound " +
                              std::to_string(max_degree));
    Factorization out;
    std::map<std::vector<Rational>, std::pair<LaurentPoly, int>> found;
    auto record = [&](const poly::Poly& g) {
        LaurentPoly c = canonical_associate(LaurentPoly::from_poly(g));
        auto key = c.poly_part();
        auto [it, fresh] = found.try_emplace(key, c, 0);
        ++it->second.second;
    };

    poly::Poly p = canonical_associate(f).poly_part();
    // rational roots a/b with a | p(0), b | lead
    if (!p.empty()) {
        auto try_root = [&](const Integer& a, const Integer& b) {
            poly::Poly lin{Rational(-a), Rational(b)};
            for (;;) {
                if (poly::degree(p) < 1) return;
                auto [q, r] = poly::divmod(p, lin);
                if (!r.empty()) return;
                record(lin);
                p = canonical_associate(LaurentPoly::from_poly(q)).poly_part();
            }
        };
        for (const auto& b : positive_divisors(num(p.back())))
            for (const auto& a : positive_divisors(num(p.front()))) {
                if (mp::gcd(a, b) != 1) continue;
                try_root(a, b);
                try_root(-a, b);
            }
    }
    for (int k = 2; 2 * k <= poly::degree(p); ++k) {
        for (;;) {
            if (2 * k > poly::degree(p)) break;
            poly::Poly q = kronecker_factor(p, k);
            if (q.empty()) break;
            for (;;) {
                auto [quot, rem] = poly::divmod(p, q);
                if (!rem.empty()) break;
                record(q);
                p = canonical_associate(LaurentPoly::from_poly(quot)).poly_part();
            }
        }
    }
    if (poly::degree(p) >= 1) record(p);

    for (auto& [key, v] : found) out.factors.push_back(v);
    std::stable_sort(out.factors.begin(), out.factors.end(),
                     [](const auto& x, const auto& y) { return x.first.span() < y.first.span(); });
    LaurentPoly prod(1);
    for (const auto& [g, k] : out.factors) prod *= pow(g, static_cast<unsigned>(k));
    out.unit_exponent = f.low();
    out.unit_coeff = f.leading() / prod.leading();
    if (!(out.expand() == f)) throw InvariantViolation("factorization does not reconstruct input");
    return out;
}

bool is_irreducible(const LaurentPoly& f, int max_degree) {
    if (f.is_zero() || f.is_monomial()) return false;
    auto fac = factor_rational_poly(f, max_degree);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace concord
