#include "concord/plumbing.hpp"

#include "concord/errors.hpp"
#include "concord/exact/linalg.hpp"

namespace concord {

void PlumbingGraph::validate() const {
    if (branches.size() < 3) throw InputError("plumbing graph needs at least 3 branches");
    for (const auto& b : branches) {
        if (b.empty()) throw InputError("plumbing graph has an empty branch");
        for (long e : b)
            if (e > -2) throw InputError("branch decoration " + std::to_string(e) + " is not <= -2");
    }
}

Eigen::Index PlumbingGraph::vertex_count() const {
    Eigen::Index n = 1;
    for (const auto& b : branches) n += static_cast<Eigen::Index>(b.size());
    return n;
}

Eigen::Index PlumbingGraph::index(std::size_t l, std::size_t j) const {
    Eigen::Index idx = 1;
    for (std::size_t k = 0; k < l; ++k) idx += static_cast<Eigen::Index>(branches[k].size());
    return idx + static_cast<Eigen::Index>(j);
}

std::vector<std::string> PlumbingGraph::basis_labels() const {
    std::vector<std::string> out{"b0"};
    for (std::size_t l = 0; l < branches.size(); ++l)
        for (std::size_t j = 0; j < branches[l].size(); ++j)
            out.push_back("b" + std::to_string(l + 1) + "," + std::to_string(j + 1));
    return out;
}

Rational cf_value(const std::vector<long>& entries) {
    if (entries.empty()) throw CapabilityError("continued fraction of an empty list");
    for (long x : entries)
        if (x < 2) throw InputError("continued fraction entries must be >= 2");
    Rational v(entries.back());
    for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) v = Rational(*it) - 1 / v;
    return v;
}

std::vector<long> hirzebruch_jung(const Rational& x) {
    if (x <= 1) throw InputError("Hirzebruch-Jung expansion needs a fraction > 1");
    std::vector<long> out;
    Rational v = x;
    for (;;) {
        Integer c = ceil(v);
        if (c == v) {
            out.push_back(c.convert_to<long>());
            return out;
        }
        out.push_back(c.convert_to<long>());
        v = 1 / (Rational(c) - v);
    }
}

Integer BranchData::n(std::size_t i, std::size_t j) const {
    if (i == j + 1) return Integer(1);
    if (i < 1 || j > chain.size() || i > j) throw InputError("branch index out of range");
    std::vector<long> sub;
    for (std::size_t k = i - 1; k < j; ++k) sub.push_back(-chain[k]);
    return num(cf_value(sub));
}

Integer BranchData::d(std::size_t i, std::size_t j) const {
    if (i == j + 1) return Integer(0);
    if (i < 1 || j > chain.size() || i > j) throw InputError("branch index out of range");
    std::vector<long> sub;
    for (std::size_t k = i - 1; k < j; ++k) sub.push_back(-chain[k]);
    return den(cf_value(sub));
}

BranchData branch_data(const std::vector<long>& chain) {
    std::vector<long> neg;
    for (long e : chain) neg.push_back(-e);
    Rational v = cf_value(neg);
    BranchData b;
    b.alpha = num(v);
    b.omega = den(v);
    b.chain = chain;
    return b;
}

std::vector<BranchData> branch_data(const PlumbingGraph& g) {
    std::vector<BranchData> out;
    for (const auto& b : g.branches) out.push_back(branch_data(b));
    return out;
}

IntMatrix intersection_form(const PlumbingGraph& g) {
    g.validate();
    const Eigen::Index n = g.vertex_count();
    IntMatrix m = IntMatrix::Zero(n, n);
    m(0, 0) = g.e0;
    for (std::size_t l = 0; l < g.branches.size(); ++l)
        for (std::size_t j = 0; j < g.branches[l].size(); ++j) {
            const Eigen::Index v = g.index(l, j);
            m(v, v) = g.branches[l][j];
            const Eigen::Index prev = j == 0 ? 0 : v - 1;
            m(v, prev) = m(prev, v) = 1;
        }
    return m;
}

Rational orbifold_euler(const PlumbingGraph& g) {
    g.validate();
    Rational e(g.e0);
    for (const auto& b : branch_data(g)) e += Rational(b.omega, b.alpha);
    return e;
}

bool is_negative_definite(const PlumbingGraph& g) {
    const bool by_euler = orbifold_euler(g) < 0;
    const bool by_signature = signature(intersection_form(g)) == -g.vertex_count();
    if (by_euler != by_signature)
        throw InvariantViolation("orbifold Euler number and signature disagree on definiteness");
    return by_euler;
}

}  // namespace concord
