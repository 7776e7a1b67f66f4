#include "concord/linkforms.hpp"

#include "concord/errors.hpp"
#include "concord/exact/linalg.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <string>

namespace concord {

namespace {

Integer lcm(const Integer& a, const Integer& b) { return a / mp::gcd(a, b) * b; }

std::vector<Integer> prime_divisors(Integer n) {
    std::vector<Integer> out;
    for (Integer p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Exhaustive isotropic-subgroup search on a small group, elements indexed in mixed radix.
class MetabolizerSearch {
public:
    MetabolizerSearch(const FiniteLinkingForm& b, long budget) : budget_(budget) {
        for (const Integer& o : b.orders) orders_.push_back(o.convert_to<long>());
        size_ = 1;
        expo_ = 1;
        for (long o : orders_) {
            size_ *= o;
            expo_ = std::lcm(expo_, o);
        }
        const auto k = orders_.size();
        table_.assign(k, std::vector<long>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                const Rational v = b.pairing(Eigen::Index(i), Eigen::Index(j)) * expo_;
                table_[i][j] = static_cast<long>(mod_floor(num(v), Integer(expo_)));
            }
        coords_.resize(static_cast<std::size_t>(size_));
        for (long x = 0; x < size_; ++x) {
            long r = x;
            for (long o : orders_) {
                coords_[std::size_t(x)].push_back(r % o);
                r /= o;
            }
        }
    }

    std::optional<std::vector<long>> run() {
        const long target = std::lround(std::sqrt(static_cast<double>(size_)));
        if (target * target != size_) return std::nullopt;
        target_ = target;
        for (long x = 1; x < size_; ++x)
            if (pair(x, x) == 0) isotropic_.push_back(x);
        std::vector<char> member(static_cast<std::size_t>(size_), 0);
        member[0] = 1;
        std::vector<long> gens;
        if (dfs(member, 1, gens)) return found_;
        return std::nullopt;
    }

    const std::vector<long>& coords(long x) const { return coords_[std::size_t(x)]; }

private:
    long pair(long x, long y) const {
        const auto& a = coords_[std::size_t(x)];
        const auto& b = coords_[std::size_t(y)];
        long s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j) s = (s + a[i] * b[j] % expo_ * table_[i][j]) % expo_;
        }
        return s;
    }

    long add(long x, long y) const {
        const auto& a = coords_[std::size_t(x)];
        const auto& b = coords_[std::size_t(y)];
        long idx = 0, radix = 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            idx += ((a[i] + b[i]) % orders_[i]) * radix;
            radix *= orders_[i];
        }
        return idx;
    }

    bool dfs(const std::vector<char>& member, long count, std::vector<long>& gens) {
        if (++nodes_ > budget_) throw CapabilityError("metabolizer search exceeded its budget");
        if (count == target_) {
            long perp = 0;
            for (long y = 0; y < size_; ++y) {
                bool ok = true;
                for (long g : gens) ok = ok && pair(y, g) == 0;
                perp += ok;
            }
            if (perp != count) return false;
            found_ = gens;
            return true;
        }
        for (long x : isotropic_) {
            if (member[std::size_t(x)]) continue;
            bool ok = true;
            for (long g : gens) ok = ok && pair(x, g) == 0;
            if (!ok) continue;
            std::vector<char> next = member;
            std::vector<long> elems;
            for (long y = 0; y < size_; ++y)
                if (member[std::size_t(y)]) elems.push_back(y);
            long grown = count;
            for (long mult = x; !member[std::size_t(mult)]; mult = add(mult, x))
                for (long y : elems) {
                    const long z = add(y, mult);
                    if (!next[std::size_t(z)]) {
                        next[std::size_t(z)] = 1;
                        ++grown;
                    }
                }
            if (grown > target_) continue;
            if (!visited_.insert(std::string(next.begin(), next.end())).second) continue;
            gens.push_back(x);
            if (dfs(next, grown, gens)) return true;
            gens.pop_back();
        }
        return false;
    }

    std::vector<long> orders_;
    long size_ = 1, expo_ = 1, target_ = 0;
    std::vector<std::vector<long>> table_;
    std::vector<std::vector<long>> coords_;
    std::vector<long> isotropic_;
    std::set<std::string> visited_;
    std::vector<long> found_;
    long budget_;
    long nodes_ = 0;
};

}  // namespace

Rational mod_one(const Rational& q) { return q - Rational(floor(q)); }

void FiniteLinkingForm::validate() const {
    const auto k = static_cast<Eigen::Index>(orders.size());
    if (pairing.rows() != k || pairing.cols() != k) throw InputError("linking form: pairing size does not match orders");
    for (const Integer& o : orders)
        if (o <= 1) throw InputError("linking form: cyclic orders must exceed 1");
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) {
            if (mod_one(pairing(i, j) - pairing(j, i)) != 0) throw InputError("linking form is not symmetric");
            if (den(pairing(i, j) * Rational(orders[std::size_t(i)])) != 1)
                throw InputError("linking form: order(g) B(g, h) is not an integer");
        }
    if (k == 0) return;
    // x -> B(x, -) as a map to sum Z/o_j; nonsingular iff its kernel {x : Mx in DZ^k} is exactly DZ^k.
    IntMatrix big = IntMatrix::Zero(k, 2 * k);
    for (Eigen::Index j = 0; j < k; ++j) {
        for (Eigen::Index i = 0; i < k; ++i) big(j, i) = num(pairing(i, j) * Rational(orders[std::size_t(j)]));
        big(j, k + j) = -orders[std::size_t(j)];
    }
    IntMatrix ker = integer_kernel(big);
    IntMatrix basis = lattice_basis(IntMatrix(ker.topRows(k)));
    if (basis.cols() != k || mp::abs(determinant(basis)) != order()) throw InputError("linking form is singular");
}

Integer FiniteLinkingForm::order() const {
    Integer n = 1;
    for (const Integer& o : orders) n *= o;
    return n;
}

AbelianGroup FiniteLinkingForm::group() const {
    IntMatrix d = IntMatrix::Zero(Eigen::Index(orders.size()), Eigen::Index(orders.size()));
    for (std::size_t i = 0; i < orders.size(); ++i) d(Eigen::Index(i), Eigen::Index(i)) = orders[i];
    return cokernel(d);
}

Rational FiniteLinkingForm::operator()(const IntVector& x, const IntVector& y) const {
    Rational s = 0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        for (Eigen::Index j = 0; j < y.size(); ++j) s += Rational(x(i) * y(j)) * pairing(i, j);
    return mod_one(s);
}

FormFromMatrix form_from_linking_matrix(const IntMatrix& l, LinkSign sign) {
    if (!is_symmetric(l)) throw InputError("linking matrix must be symmetric");
    if (determinant(l) == 0) throw InputError("linking matrix is singular");
    const SmithForm snf = smith_normal_form(l);
    const RatMatrix inv = inverse<Rational>(to_rational(l));
    const int s = sign == LinkSign::negative ? -1 : 1;
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < l.rows(); ++i)
        if (snf.D(i, i) > 1) keep.push_back(i);
    const auto k = static_cast<Eigen::Index>(keep.size());
    FormFromMatrix out;
    out.coordinates = IntMatrix(k, l.cols());
    out.generators = IntMatrix(l.rows(), k);
    for (Eigen::Index a = 0; a < k; ++a) {
        out.form.orders.push_back(snf.D(keep[std::size_t(a)], keep[std::size_t(a)]));
        out.coordinates.row(a) = snf.U.row(keep[std::size_t(a)]);
        out.generators.col(a) = snf.U_inverse.col(keep[std::size_t(a)]);
    }
    const RatMatrix g = to_rational(out.generators);
    out.form.pairing = RatMatrix(k, k);
    for (Eigen::Index a = 0; a < k; ++a)
        for (Eigen::Index b = 0; b < k; ++b)
            out.form.pairing(a, b) = mod_one(s * (g.col(a).transpose() * inv * g.col(b))(0, 0));
    return out;
}

Rational linking_number(const IntMatrix& l, const IntVector& v, const IntVector& w, const Integer& scale,
                        LinkSign sign) {
    if (determinant(l) == 0) throw InputError("linking matrix is singular");
    const RatMatrix inv = inverse<Rational>(to_rational(l));
    const Rational value = (to_rational(v).transpose() * inv * to_rational(w))(0, 0);
    const Rational sc(scale);
    return (sign == LinkSign::negative ? -1 : 1) * sc * sc * value;
}

Integer class_order(const IntMatrix& l, const IntVector& v) {
    if (determinant(l) == 0) throw InputError("linking matrix is singular");
    const RatVector x = inverse<Rational>(to_rational(l)) * to_rational(v);
    Integer n = 1;
    for (Eigen::Index i = 0; i < x.size(); ++i) n = lcm(n, den(x(i)));
    return n;
}

FiniteLinkingForm orthogonal_sum(const FiniteLinkingForm& a, const FiniteLinkingForm& b) {
    FiniteLinkingForm out;
    out.orders = a.orders;
    out.orders.insert(out.orders.end(), b.orders.begin(), b.orders.end());
    const Eigen::Index ka = a.pairing.rows(), kb = b.pairing.rows();
    out.pairing = RatMatrix::Zero(ka + kb, ka + kb);
    out.pairing.topLeftCorner(ka, ka) = a.pairing;
    out.pairing.bottomRightCorner(kb, kb) = b.pairing;
    return out;
}

FiniteLinkingForm negate(const FiniteLinkingForm& b) {
    FiniteLinkingForm out = b;
    for (Eigen::Index i = 0; i < out.pairing.rows(); ++i)
        for (Eigen::Index j = 0; j < out.pairing.cols(); ++j) out.pairing(i, j) = mod_one(-b.pairing(i, j));
    return out;
}

FiniteLinkingForm cyclic_form(const Integer& n, const Integer& d) {
    FiniteLinkingForm out{{d}, RatMatrix(1, 1)};
    out.pairing(0, 0) = mod_one(Rational(n, d));
    return out;
}

std::map<Integer, FiniteLinkingForm> primary_decompose(const FiniteLinkingForm& b) {
    std::map<Integer, FiniteLinkingForm> out;
    for (const Integer& p : prime_divisors(b.order())) {
        std::vector<std::size_t> idx;
        std::vector<Integer> mult, orders;
        for (std::size_t i = 0; i < b.orders.size(); ++i) {
            Integer pp = 1, rest = b.orders[i];
            while (rest % p == 0) {
                rest /= p;
                pp *= p;
            }
            if (pp == 1) continue;
            idx.push_back(i);
            mult.push_back(rest);
            orders.push_back(pp);
        }
        FiniteLinkingForm part{orders, RatMatrix(Eigen::Index(idx.size()), Eigen::Index(idx.size()))};
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t c = 0; c < idx.size(); ++c)
                part.pairing(Eigen::Index(a), Eigen::Index(c)) =
                    mod_one(Rational(mult[a] * mult[c]) * b.pairing(Eigen::Index(idx[a]), Eigen::Index(idx[c])));
        out.emplace(p, std::move(part));
    }
    return out;
}

std::optional<std::vector<IntVector>> find_metabolizer(const FiniteLinkingForm& b, const MetabolicOptions& opt) {
    if (b.order() > opt.order_bound)
        throw CapabilityError("metabolizer search: group order " + to_string(b.order()) + " exceeds bound " +
                              to_string(opt.order_bound));
    std::vector<IntVector> gens;
    for (const auto& [p, part] : primary_decompose(b)) {
        MetabolizerSearch search(part, opt.node_budget);
        auto found = search.run();
        if (!found) return std::nullopt;
        // map p-part coordinates back: generator a of the part is mult_a * g_{idx_a}
        std::vector<std::size_t> idx;
        std::vector<Integer> mult;
        for (std::size_t i = 0; i < b.orders.size(); ++i) {
            Integer rest = b.orders[i];
            while (rest % p == 0) rest /= p;
            if (rest == b.orders[i]) continue;
            idx.push_back(i);
            mult.push_back(rest);
        }
        for (long x : *found) {
            IntVector v = IntVector::Zero(Eigen::Index(b.orders.size()));
            const auto& c = search.coords(x);
            for (std::size_t a = 0; a < idx.size(); ++a)
                v(Eigen::Index(idx[a])) = mod_floor(mult[a] * c[a], b.orders[idx[a]]);
            gens.push_back(v);
        }
    }
    return gens;
}

bool is_metabolic(const FiniteLinkingForm& b, const MetabolicOptions& opt) {
    return find_metabolizer(b, opt).has_value();
}

bool witt_equivalent(const FiniteLinkingForm& b1, const FiniteLinkingForm& b2, const MetabolicOptions& opt) {
    return is_metabolic(orthogonal_sum(b1, negate(b2)), opt);
}

}  // namespace concord
