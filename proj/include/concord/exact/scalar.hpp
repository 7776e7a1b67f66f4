#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace concord {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Mat<Integer>;
using RatMatrix = Mat<Rational>;
using IntVector = Vec<Integer>;
using RatVector = Vec<Rational>;

inline Integer num(const Rational& q) { return mp::numerator(q); }
inline Integer den(const Rational& q) { return mp::denominator(q); }

inline int sign(const Integer& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

// Floor division and nonnegative remainder for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);
Integer floor(const Rational& q);
Rational power(Rational base, unsigned exponent);
Integer power(Integer base, unsigned exponent);
Integer ceil(const Rational& q);

// "p/q" with "/q" omitted when q == 1.
std::string to_string(const Integer& x);
std::string to_string(const Rational& q);
// Accepts "p", "p/q" and "-p/q"; throws InputError otherwise.
Rational parse_rational(std::string_view s);

// Row-major conversion helpers used by I/O and tests.
IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows);
RatMatrix to_rational(const IntMatrix& m);
// Throws InputError if any entry is non-integral.
IntMatrix to_integer(const RatMatrix& m);

}  // namespace concord
