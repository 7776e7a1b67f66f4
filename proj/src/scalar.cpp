#include "concord/exact/scalar.hpp"

#include "concord/errors.hpp"

#include <cctype>

namespace concord {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
    Integer r = a % b;
    if (r < 0) r += (b < 0 ? -b : b);
    return r;
}

Rational power(Rational base, unsigned exponent) {
    Rational r(1);
    for (; exponent; exponent >>= 1, base *= base)
        if (exponent & 1) r *= base;
    return r;
}

Integer power(Integer base, unsigned exponent) {
    Integer r(1);
    for (; exponent; exponent >>= 1, base *= base)
        if (exponent & 1) r *= base;
    return r;
}

Integer floor(const Rational& q) { return floor_div(num(q), den(q)); }

Integer ceil(const Rational& q) { return -floor_div(-num(q), den(q)); }

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

namespace {
bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}
}  // namespace

Rational parse_rational(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    auto slash = s.find('/');
    std::string_view n = s.substr(0, slash);
    std::string_view d = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!is_integer_literal(n) || !is_integer_literal(d))
        throw InputError("not a rational number: '" + std::string(s) + "'");
    Integer nn(std::string(n[0] == '+' ? n.substr(1) : n));
    Integer dd(std::string(d[0] == '+' ? d.substr(1) : d));
    if (dd == 0) throw InputError("zero denominator: '" + std::string(s) + "'");
    return Rational(nn, dd);
}

IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows) {
    const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index c = r ? static_cast<Eigen::Index>(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != c) throw InputError("ragged matrix");
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }

IntMatrix to_integer(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (den(m(i, j)) != 1) throw InputError("non-integral entry " + to_string(m(i, j)));
            out(i, j) = num(m(i, j));
        }
    return out;
}

}  // namespace concord
