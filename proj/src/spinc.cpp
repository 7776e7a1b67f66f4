#include "concord/spinc.hpp"

#include "concord/errors.hpp"
#include "concord/exact/linalg.hpp"
#include "concord/exact/snf.hpp"

#include <algorithm>
#include <sstream>

namespace concord {

namespace {

void check_shape(const PlumbingGraph& g, const SpinCRep& rep) {
    if (rep.a.size() != g.branches.size()) throw InputError("rep has wrong number of branches");
    for (std::size_t l = 0; l < rep.a.size(); ++l)
        if (rep.a[l].size() != g.branches[l].size())
            throw InputError("rep branch " + std::to_string(l + 1) + " has wrong length");
}

void require_definite(const PlumbingGraph& g) {
    if (!is_negative_definite(g)) throw InputError("plumbing graph is not negative definite");
}

// Labels characteristic vectors by their coset modulo 2 lambda(H_2).
class ClassLabeler {
public:
    explicit ClassLabeler(const PlumbingGraph& g) {
        SmithForm s = smith_normal_form(IntMatrix(2 * intersection_form(g)));
        u_ = std::move(s.U);
        diag_ = s.diagonal();
    }
    SpinCClass operator()(const CharVector& k) const {
        IntVector uk = u_ * k;
        SpinCClass c;
        for (std::size_t i = 0; i < diag_.size(); ++i) {
            if (diag_[i] == 1) continue;
            c.residue.push_back(diag_[i] == 0 ? uk(static_cast<Eigen::Index>(i))
                                              : mod_floor(uk(static_cast<Eigen::Index>(i)), diag_[i]));
        }
        return c;
    }

private:
    IntMatrix u_;
    std::vector<Integer> diag_;
};

}  // namespace

SpinCRep SpinCRep::zero(const PlumbingGraph& g) {
    SpinCRep r{Integer(0), {}};
    for (const auto& b : g.branches) r.a.emplace_back(b.size(), Integer(0));
    return r;
}

std::string SpinCClass::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < residue.size(); ++i) os << (i ? "," : "") << residue[i];
    os << "]";
    return os.str();
}

CharVector canonical_class(const PlumbingGraph& g) {
    g.validate();
    CharVector k(g.vertex_count());
    k(0) = -g.e0 - 2;
    for (std::size_t l = 0; l < g.branches.size(); ++l)
        for (std::size_t j = 0; j < g.branches[l].size(); ++j) k(g.index(l, j)) = -g.branches[l][j] - 2;
    return k;
}

CharVector char_vector(const PlumbingGraph& g, const SpinCRep& rep) {
    check_shape(g, rep);
    CharVector k = canonical_class(g);
    k(0) -= 2 * rep.a0;
    for (std::size_t l = 0; l < rep.a.size(); ++l)
        for (std::size_t j = 0; j < rep.a[l].size(); ++j) k(g.index(l, j)) -= 2 * rep.a[l][j];
    return k;
}

bool is_characteristic(const PlumbingGraph& g, const CharVector& k) {
    IntMatrix m = intersection_form(g);
    if (k.size() != m.rows()) throw InputError("characteristic vector has wrong length");
    for (Eigen::Index i = 0; i < k.size(); ++i)
        if (mod_floor(k(i) - m(i, i), Integer(2)) != 0) return false;
    return true;
}

std::optional<IntVector> preimage(const PlumbingGraph& g, const CharVector& k) {
    auto x = solve<Rational>(to_rational(intersection_form(g)), RatMatrix(to_rational(k)));
    if (!x) throw InputError("intersection form is singular");
    for (Eigen::Index i = 0; i < x->rows(); ++i)
        if (den((*x)(i, 0)) != 1) return std::nullopt;
    return IntVector(to_integer(*x));
}

std::vector<Integer> aggregate_a(const PlumbingGraph& g, const SpinCRep& rep) {
    check_shape(g, rep);
    std::vector<Integer> out;
    for (std::size_t l = 0; l < g.branches.size(); ++l) {
        BranchData b = branch_data(g.branches[l]);
        const std::size_t s = b.length();
        Integer total(0);
        for (std::size_t t = 1; t <= s; ++t) total += b.n(t + 1, s) * rep.a[l][t - 1];
        out.push_back(total);
    }
    return out;
}

std::vector<Integer> greedy_digits(const BranchData& b, Integer a_l) {
    const std::size_t s = b.length();
    std::vector<Integer> digits;
    for (std::size_t t = 1; t <= s; ++t) {
        Integer n = b.n(t + 1, s);
        Integer q = floor_div(a_l, n);
        digits.push_back(q);
        a_l -= q * n;
    }
    return digits;
}

SpinCRep rep_from_aggregates(const PlumbingGraph& g, const Integer& a0, const std::vector<Integer>& agg) {
    if (agg.size() != g.branches.size()) throw InputError("wrong number of aggregates");
    SpinCRep r{a0, {}};
    for (std::size_t l = 0; l < agg.size(); ++l) r.a.push_back(greedy_digits(branch_data(g.branches[l]), agg[l]));
    return r;
}

Integer distinguished_check_range(const PlumbingGraph& g, const Integer& a0, const std::vector<Integer>& agg) {
    auto bd = branch_data(g);
    Rational c = Rational(a0) + 1;
    for (std::size_t l = 0; l < bd.size(); ++l) c += Rational(agg[l], bd[l].alpha);
    Integer i = ceil(c / (-orbifold_euler(g)));
    return i < 1 ? Integer(1) : i;
}

bool satisfies_aggregate_conditions(const PlumbingGraph& g, const Integer& a0, const std::vector<Integer>& agg) {
    if (agg.size() != g.branches.size()) throw InputError("wrong number of aggregates");
    if (a0 < 0) return false;
    auto bd = branch_data(g);
    for (std::size_t l = 0; l < bd.size(); ++l)
        if (agg[l] < 0 || agg[l] >= bd[l].alpha) return false;
    const Integer last = distinguished_check_range(g, a0, agg);
    for (Integer i = 1; i <= last; ++i) {
        Integer rhs = -1 - i * g.e0;
        for (std::size_t l = 0; l < bd.size(); ++l) rhs -= floor_div(i * bd[l].omega + agg[l], bd[l].alpha);
        if (a0 > rhs) return false;
    }
    return true;
}

bool is_distinguished(const PlumbingGraph& g, const SpinCRep& rep) {
    require_definite(g);
    auto agg = aggregate_a(g, rep);
    if (!satisfies_aggregate_conditions(g, rep.a0, agg)) return false;
    for (std::size_t l = 0; l < agg.size(); ++l)
        if (greedy_digits(branch_data(g.branches[l]), agg[l]) != rep.a[l]) return false;
    return true;
}

Rational tau_bound(const PlumbingGraph& g, const Integer& a0, const std::vector<Integer>& agg) {
    auto bd = branch_data(g);
    Rational c = Rational(a0) + 1;
    for (std::size_t l = 0; l < bd.size(); ++l) c += Rational(agg[l] - bd[l].alpha + 1, bd[l].alpha);
    return c / orbifold_euler(g);
}

std::vector<Integer> tau_values(const PlumbingGraph& g, const Integer& a0, const std::vector<Integer>& agg,
                                std::size_t count) {
    auto bd = branch_data(g);
    std::vector<Integer> tau{Integer(0)};
    for (std::size_t t = 0; tau.size() < count; ++t) {
        Integer step = a0 + 1 - Integer(static_cast<long>(t)) * g.e0;
        for (std::size_t l = 0; l < bd.size(); ++l)
            step += floor_div(-Integer(static_cast<long>(t)) * bd[l].omega + agg[l], bd[l].alpha);
        tau.push_back(tau.back() + step);
    }
    tau.resize(count);
    return tau;
}

TauMin tau_min(const PlumbingGraph& g, const SpinCRep& rep) {
    if (!is_distinguished(g, rep)) throw InputError("representative is not distinguished");
    auto agg = aggregate_a(g, rep);
    Integer last = ceil(tau_bound(g, rep.a0, agg));
    if (last < 0) last = 0;
    TauMin out;
    out.table = tau_values(g, rep.a0, agg, last.convert_to<std::size_t>() + 1);
    out.minimum = *std::min_element(out.table.begin(), out.table.end());
    return out;
}

Rational k_square(const PlumbingGraph& g, const CharVector& k) {
    RatMatrix kr = to_rational(k);
    auto x = solve<Rational>(to_rational(intersection_form(g)), kr);
    if (!x) throw InputError("intersection form is singular");
    return (kr.transpose() * *x)(0, 0);
}

Rational d_invariant(const PlumbingGraph& g, const SpinCRep& rep) {
    TauMin t = tau_min(g, rep);
    const Rational ksq = k_square(g, char_vector(g, rep));
    return (ksq + Rational(g.vertex_count())) / 4 - 2 * Rational(t.minimum);
}

SpinCClass spinc_class(const PlumbingGraph& g, const CharVector& k) {
    if (!is_characteristic(g, k)) throw InputError("vector is not characteristic");
    return ClassLabeler(g)(k);
}

std::vector<C1ZeroClass> c1_zero_classes(const PlumbingGraph& g) {
    require_definite(g);
    const IntMatrix lam = intersection_form(g);
    const Eigen::Index n = lam.rows();
    // lambda x = diag(lambda) over GF(2)
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n + 1)));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) a[i][j] = mod_floor(lam(i, j), Integer(2)).convert_to<int>();
        a[i][n] = mod_floor(lam(i, i), Integer(2)).convert_to<int>();
    }
    std::vector<Eigen::Index> pivot_col;
    Eigen::Index row = 0;
    for (Eigen::Index c = 0; c < n && row < n; ++c) {
        Eigen::Index p = row;
        while (p < n && !a[p][c]) ++p;
        if (p == n) continue;
        std::swap(a[p], a[row]);
        for (Eigen::Index r = 0; r < n; ++r)
            if (r != row && a[r][c])
                for (Eigen::Index k = 0; k <= n; ++k) a[r][k] ^= a[row][k];
        pivot_col.push_back(c);
        ++row;
    }
    for (Eigen::Index r = row; r < n; ++r)
        if (a[r][n]) return {};
    std::vector<Eigen::Index> free_cols;
    for (Eigen::Index c = 0; c < n; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free_cols.push_back(c);
    if (free_cols.size() > 20) throw CapabilityError("too many classes with vanishing c_1 to enumerate");
    ClassLabeler label(g);
    std::vector<C1ZeroClass> out;
    for (unsigned long mask = 0; mask < (1UL << free_cols.size()); ++mask) {
        IntVector x = IntVector::Zero(n);
        for (std::size_t f = 0; f < free_cols.size(); ++f) x(free_cols[f]) = (mask >> f) & 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) {
            int v = a[r][n];
            for (Eigen::Index f : free_cols) v ^= a[r][f] & x(f).convert_to<int>();
            x(pivot_col[r]) = v;
        }
        CharVector k = lam * x;
        out.push_back({label(k), k, x});
    }
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.cls < q.cls; });
    return out;
}

SpinCRep laufer_representative(const PlumbingGraph& g, const CharVector& k) {
    require_definite(g);
    if (!is_characteristic(g, k)) throw InputError("vector is not characteristic");
    const IntMatrix lam = intersection_form(g);
    const RatMatrix lr = to_rational(lam);
    RatMatrix p = to_rational(IntMatrix((k - canonical_class(g)) / 2));
    RatMatrix c = *solve<Rational>(lr, p);
    IntVector x(lam.rows());
    RatVector frac(lam.rows());
    for (Eigen::Index i = 0; i < c.rows(); ++i) frac(i) = c(i, 0) - Rational(floor(c(i, 0)));
    // x holds the integer increments; the current element is frac + x.
    x.setZero();
    for (;;) {
        RatVector cur = frac + to_rational(x);
        RatVector q = lr * cur;
        Eigen::Index w = -1;
        for (Eigen::Index i = 0; i < q.size(); ++i)
            if (q(i) > 0) {
                w = i;
                break;
            }
        if (w < 0) {
            IntVector a = to_integer(RatMatrix(-q));
            SpinCRep r{a(0), {}};
            for (std::size_t l = 0; l < g.branches.size(); ++l) {
                std::vector<Integer> digits;
                for (std::size_t j = 0; j < g.branches[l].size(); ++j) digits.push_back(a(g.index(l, j)));
                r.a.push_back(std::move(digits));
            }
            return r;
        }
        x(w) += 1;
    }
}

Rational class_d_invariant(const PlumbingGraph& g, const CharVector& k) {
    SpinCRep r = laufer_representative(g, k);
    if (!is_distinguished(g, r))
        throw InvariantViolation("Laufer representative fails the distinguished-representative test");
    return d_invariant(g, r);
}

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::absent: return "absent";
        case SearchStatus::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

template <class Visit>
bool scan_box(const PlumbingGraph& g, const SearchBounds& bounds, long& examined, Visit visit) {
    auto bd = branch_data(g);
    const Integer a0_max = bounds.a0_max.value_or(Integer(-1 - g.e0));
    std::vector<Integer> hi;
    for (std::size_t l = 0; l < bd.size(); ++l)
        hi.push_back(bounds.agg_max ? (*bounds.agg_max)[l] : Integer(bd[l].alpha - 1));
    for (Integer a0 = 0; a0 <= a0_max; ++a0) {
        std::vector<Integer> agg(bd.size(), Integer(0));
        for (;;) {
            if (++examined > bounds.budget) return false;
            if (visit(a0, agg)) return true;
            std::size_t l = 0;
            while (l < agg.size() && ++agg[l] > hi[l]) agg[l++] = 0;
            if (l == agg.size()) break;
        }
    }
    return true;
}

bool default_box(const PlumbingGraph& g, const SearchBounds& bounds) {
    auto bd = branch_data(g);
    if (bounds.a0_max && *bounds.a0_max < -1 - g.e0) return false;
    if (bounds.agg_max)
        for (std::size_t l = 0; l < bd.size(); ++l)
            if ((*bounds.agg_max)[l] < bd[l].alpha - 1) return false;
    return true;
}

}  // namespace

SearchResult find_distinguished(const PlumbingGraph& g, const SpinCClass& target, const SearchBounds& bounds) {
    require_definite(g);
    if (bounds.agg_max && bounds.agg_max->size() != g.branches.size())
        throw InputError("search bounds have wrong number of branches");
    ClassLabeler label(g);
    SearchResult res;
    bool hit = false;
    const bool completed = scan_box(g, bounds, res.examined, [&](const Integer& a0, const std::vector<Integer>& agg) {
        if (!satisfies_aggregate_conditions(g, a0, agg)) return false;
        SpinCRep r = rep_from_aggregates(g, a0, agg);
        if (label(char_vector(g, r)) != target) return false;
        res.rep = std::move(r);
        hit = true;
        return true;
    });
    if (hit)
        res.status = SearchStatus::found;
    else if (completed && default_box(g, bounds))
        res.status = SearchStatus::absent;
    else
        res.status = SearchStatus::unknown;
    return res;
}

std::vector<SpinCRep> all_distinguished(const PlumbingGraph& g, long budget) {
    require_definite(g);
    SearchBounds bounds;
    bounds.budget = budget;
    long examined = 0;
    std::vector<SpinCRep> out;
    const bool completed = scan_box(g, bounds, examined, [&](const Integer& a0, const std::vector<Integer>& agg) {
        if (satisfies_aggregate_conditions(g, a0, agg)) out.push_back(rep_from_aggregates(g, a0, agg));
        return false;
    });
    if (!completed) throw CapabilityError("distinguished-representative search exceeded its budget");
    return out;
}

Rational lens_d(const Integer& p, const Integer& q, const Integer& i) {
    if (p < 1 || q < 0 || (p > 1 && q >= p) || (p == 1 && q != 0) || mp::gcd(p, q) != 1)
        throw InputError("lens space L(" + p.str() + "," + q.str() + ") needs p > q >= 0 coprime");
    if (i < 0 || i >= p) throw InputError("spin^c index out of range 0..p-1");
    if (p == 1) return Rational(0);
    Integer t = 2 * i + 1 - p - q;
    return Rational(t * t - p * q, 4 * p * q) - lens_d(q, p % q, i % q);
}

Integer lens_canonical_index(const Integer& p, const Integer& q) {
    if (p < 1 || q < 0 || (p > 1 && q >= p) || mp::gcd(p, q) != 1)
        throw InputError("lens space L(" + p.str() + "," + q.str() + ") needs p > q >= 0 coprime");
    if (p % 2 == 0) throw InputError("even p has two self-conjugate spin^c structures; pass --index");
    return mod_floor((q - 1) * ((p + 1) / 2), p);
}

}  // namespace concord
