#include "concord/pdcore.hpp"

#include "concord/errors.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace concord {

namespace {

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows(), a.cols() + b.cols());
    out << a, b;
    return out;
}

IntMatrix basis_of(const IntMatrix& m) {
    if (m.cols() == 0) return IntMatrix(m.rows(), 0);
    return lattice_basis(m);
}

bool contains(const IntMatrix& lattice, const IntMatrix& sub) {
    if (sub.cols() == 0) return true;
    if (lattice.cols() == 0) return sub.isZero();
    return lattice_contains(lattice, sub);
}

IntMatrix intersect(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() == 0 || b.cols() == 0) return IntMatrix(a.rows(), 0);
    return lattice_intersection(a, b);
}

IntMatrix columns(const std::vector<IntVector>& vs, Eigen::Index n) {
    IntMatrix m(n, static_cast<Eigen::Index>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i) m.col(Eigen::Index(i)) = vs[i];
    return m;
}

AbelianGroup direct_sum(const std::vector<AbelianGroup>& gs) {
    std::vector<Integer> diag;
    for (const auto& g : gs) {
        diag.insert(diag.end(), g.torsion.begin(), g.torsion.end());
        diag.insert(diag.end(), std::size_t(g.free_rank), Integer(0));
    }
    IntMatrix d = IntMatrix::Zero(Eigen::Index(diag.size()), Eigen::Index(diag.size()));
    for (std::size_t i = 0; i < diag.size(); ++i) d(Eigen::Index(i), Eigen::Index(i)) = diag[i];
    return cokernel(d);
}

// The irreducible support of chi(g), as *-class representatives.
std::set<std::string> star_support(const PDInstance& inst, const Generator& g) {
    std::map<std::string, std::string> rep;
    for (const auto& r : inst.star_classes()) {
        rep[r] = r;
        for (const auto& irr : inst.irreducibles)
            if (irr.name == r) rep[irr.star] = r;
    }
    std::set<std::string> out;
    for (const auto& [name, e] : g.chi)
        if (e != 0) out.insert(rep.at(name));
    return out;
}

class Lattices {
public:
    explicit Lattices(const PDInstance& inst) : inst_(inst), n_(inst.dimension()), rel_(inst.relations()) {
        for (const auto& g : inst.generators) support_.push_back(star_support(inst, g));
    }

    Eigen::Index dim() const { return n_; }
    const IntMatrix& relations() const { return rel_; }

    // Lattice of generators passing the filter, plus relations.
    IntMatrix span(const std::function<bool(const std::set<std::string>&)>& keep) const {
        std::vector<IntVector> vs;
        for (std::size_t i = 0; i < inst_.generators.size(); ++i)
            if (keep(support_[i])) vs.push_back(inst_.generators[i].cls);
        return basis_of(hcat(columns(vs, n_), rel_));
    }

    IntMatrix generators(const std::function<bool(const std::set<std::string>&)>& keep) const {
        std::vector<IntVector> vs;
        for (std::size_t i = 0; i < inst_.generators.size(); ++i)
            if (keep(support_[i])) vs.push_back(inst_.generators[i].cls);
        return columns(vs, n_);
    }

    IntMatrix delta() const {
        return span([](const auto& s) { return s.empty(); });
    }
    IntMatrix primary(const std::string& rep) const {
        return span([&](const auto& s) { return s.empty() || (s.size() == 1 && s.count(rep)); });
    }
    IntMatrix coprime(const std::string& rep) const {
        return span([&](const auto& s) { return !s.count(rep); });
    }
    // C is the image of the class map, not the ambient group
    IntMatrix whole() const {
        return span([](const auto&) { return true; });
    }
    const std::set<std::string>& support(std::size_t i) const { return support_[i]; }

private:
    const PDInstance& inst_;
    Eigen::Index n_;
    IntMatrix rel_;
    std::vector<std::set<std::string>> support_;
};

std::string star_rep(const PDInstance& inst, const std::string& lambda) {
    for (const auto& irr : inst.irreducibles)
        if (irr.name == lambda) {
            for (const auto& r : inst.star_classes())
                if (r == irr.name || r == irr.star) return r;
        }
    throw InputError("unknown irreducible label '" + lambda + "'");
}

SubgroupReport make_report(const Lattices& lat, IntMatrix gens, IntMatrix lattice) {
    SubgroupReport r;
    r.generators = std::move(gens);
    r.group = lattice_quotient(lattice, basis_of(lat.relations()));
    r.lattice = std::move(lattice);
    return r;
}

Integer mod_pos(const Integer& a, const Integer& b) {
    Integer r = a % b;
    return r < 0 ? r + b : r;
}

}  // namespace

AbelianGroup lattice_quotient(const IntMatrix& big, const IntMatrix& small) {
    const Eigen::Index r = big.cols();
    if (r == 0) return {};
    IntMatrix x(r, small.cols());
    for (Eigen::Index j = 0; j < small.cols(); ++j) {
        auto sol = solve_integer(big, small.col(j));
        if (!sol) throw InvariantViolation("lattice_quotient: sublattice not contained");
        x.col(j) = *sol;
    }
    if (x.cols() == 0) return AbelianGroup{{}, long(r)};
    return cokernel(x);
}

IntMatrix PDInstance::relations() const {
    const Eigen::Index n = dimension();
    IntMatrix r = IntMatrix::Zero(n, Eigen::Index(torsion.size()));
    for (std::size_t i = 0; i < torsion.size(); ++i) r(free_rank + Eigen::Index(i), Eigen::Index(i)) = torsion[i];
    return r;
}

IntVector PDInstance::word_class(const Word& w) const {
    if (w.size() != generators.size()) throw InputError("word length does not match the generator count");
    IntVector c = IntVector::Zero(dimension());
    for (std::size_t i = 0; i < w.size(); ++i) c += Integer(w[i]) * generators[i].cls;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        auto& e = c(free_rank + Eigen::Index(i));
        e = mod_pos(e, torsion[i]);
    }
    return c;
}

std::map<std::string, int> PDInstance::word_chi(const Word& w) const {
    std::map<std::string, int> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (const auto& [name, e] : generators[i].chi)
            if (e != 0 && w[i] != 0) out[name] += int(w[i]) * e;
    return out;
}

std::vector<std::string> PDInstance::star_classes() const {
    std::vector<std::string> reps;
    std::set<std::string> seen;
    for (const auto& irr : irreducibles) {
        if (seen.count(irr.name)) continue;
        reps.push_back(irr.name);
        seen.insert(irr.name);
        seen.insert(irr.star);
    }
    return reps;
}

void PDInstance::validate(long bound) {
    if (free_rank < 0) throw InputError("negative free rank");
    for (const auto& t : torsion)
        if (t < 2) throw InputError("torsion orders must be at least 2");
    std::map<std::string, std::string> star_of;
    for (const auto& irr : irreducibles) {
        if (irr.name.empty()) throw InputError("empty irreducible label");
        if (!star_of.emplace(irr.name, irr.star).second) throw InputError("duplicate irreducible '" + irr.name + "'");
    }
    for (const auto& [name, st] : star_of) {
        auto it = star_of.find(st);
        if (it == star_of.end()) throw InputError("star of '" + name + "' is not a declared irreducible");
        if (it->second != name) throw InputError("star pairing is not an involution at '" + name + "'");
    }
    for (auto& g : generators) {
        if (g.cls.size() != dimension())
            throw InputError("class of generator '" + g.name + "' has the wrong length");
        for (const auto& [name, e] : g.chi) {
            if (!star_of.count(name)) throw InputError("generator '" + g.name + "' uses unknown irreducible '" + name + "'");
            if (e < 0) throw InputError("negative exponent in chi of '" + g.name + "'");
        }
        for (const auto& [name, e] : g.chi) {
            auto it = g.chi.find(star_of[name]);
            if ((it == g.chi.end() ? 0 : it->second) != e)
                throw InputError("chi of generator '" + g.name + "' is not self-dual");
        }
    }
    auto trimmed = [](std::map<std::string, int> m) {
        std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
        return m;
    };
    const std::size_t k = generators.size();
    for (auto& g : generators) {
        IntVector neg = -g.cls;
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            auto& e = neg(free_rank + Eigen::Index(i));
            e = mod_pos(e, torsion[i]);
        }
        const auto chi = trimmed(g.chi);
        auto good = [&](const Word& w) { return word_class(w) == neg && trimmed(word_chi(w)) == chi; };
        if (g.negation) {
            if (!good(*g.negation))
                throw InputError("declared negation word of '" + g.name + "' has the wrong class or chi");
            continue;
        }
        // Depth-first search over words with counts <= bound whose chi stays below chi(g).
        Word w(k, 0);
        std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
            if (i == k) return good(w);
            for (long c = 0; c <= bound; ++c) {
                w[i] = c;
                bool over = false;
                for (const auto& [name, e] : word_chi(w)) {
                    auto it = chi.find(name);
                    if (e > (it == chi.end() ? 0 : it->second)) over = true;
                }
                if (over) break;
                if (search(i + 1)) return true;
            }
            w[i] = 0;
            return false;
        };
        if (!search(0))
            throw InputError("no word with class -[" + g.name + "] and the same chi within bound " +
                             std::to_string(bound));
        g.negation = w;
    }
}

SubgroupReport delta_subgroup(const PDInstance& inst) {
    Lattices lat(inst);
    auto empty = [](const auto& s) { return s.empty(); };
    return make_report(lat, lat.generators(empty), lat.span(empty));
}

std::pair<SubgroupReport, SubgroupReport> primary_and_coprime_subgroups(const PDInstance& inst,
                                                                         const std::string& lambda) {
    const std::string rep = star_rep(inst, lambda);
    Lattices lat(inst);
    auto prim = [&](const auto& s) { return s.empty() || (s.size() == 1 && s.count(rep)); };
    auto cop = [&](const auto& s) { return !s.count(rep); };
    return {make_report(lat, lat.generators(prim), lat.span(prim)),
            make_report(lat, lat.generators(cop), lat.span(cop))};
}

HomReport phi_L(const PDInstance& inst) {
    Lattices lat(inst);
    const IntMatrix d = lat.delta();
    HomReport r;
    std::vector<IntMatrix> parts;
    std::vector<AbelianGroup> doms;
    for (const auto& rep : inst.star_classes()) {
        parts.push_back(lat.primary(rep));
        doms.push_back(lattice_quotient(parts.back(), d));
    }
    r.domain = direct_sum(doms);
    r.codomain = lattice_quotient(lat.whole(), d);

    IntMatrix all = d;
    for (const auto& p : parts) all = hcat(all, p);
    r.surjective = contains(all, lat.whole());

    // (x_lambda) with sum x_lambda in Delta must have every x_lambda in Delta.
    IntMatrix big = -d;
    for (const auto& p : parts) big = hcat(p, big);
    r.injective = true;
    if (big.cols() > 0) {
        std::reverse(parts.begin(), parts.end());  // hcat above prepended
        const IntMatrix ker = integer_kernel(big);
        for (Eigen::Index c = 0; c < ker.cols() && r.injective; ++c) {
            Eigen::Index off = 0;
            for (const auto& p : parts) {
                IntMatrix x = p * ker.col(c).segment(off, p.cols());
                off += p.cols();
                if (!contains(d, x)) {
                    r.injective = false;
                    break;
                }
            }
        }
    }
    return r;
}

HomReport phi_R(const PDInstance& inst) {
    Lattices lat(inst);
    const IntMatrix d = lat.delta();
    HomReport r;
    std::vector<IntMatrix> cop;
    std::vector<AbelianGroup> cods;
    for (const auto& rep : inst.star_classes()) {
        cop.push_back(lat.coprime(rep));
        cods.push_back(lattice_quotient(lat.whole(), cop.back()));
    }
    r.domain = lattice_quotient(lat.whole(), d);
    r.codomain = direct_sum(cods);

    IntMatrix meet = lat.whole();
    for (const auto& c : cop) meet = intersect(meet, c);
    r.injective = contains(d, meet);

    r.surjective = true;
    for (std::size_t i = 0; i < cop.size() && r.surjective; ++i) {
        IntMatrix others = lat.whole();
        for (std::size_t j = 0; j < cop.size(); ++j)
            if (j != i) others = intersect(others, cop[j]);
        r.surjective = contains(hcat(cop[i], others), lat.whole());
    }
    return r;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::unknown: return "unknown";
    }
    return "?";
}

StrongPDReport strong_pd_check(const PDInstance& inst, std::size_t max_generators) {
    StrongPDReport out;
    const std::size_t k = inst.generators.size();
    if (k > max_generators) {
        out.reason = "too many generators for the support enumeration";
        return out;
    }
    Lattices lat(inst);
    out.uniqueness = phi_L(inst).injective;
    for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
        std::set<std::string> factors;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) factors.insert(lat.support(i).begin(), lat.support(i).end());
        const IntMatrix m = lat.span([&](const auto& s) {
            return s.empty() || (s.size() == 1 && factors.count(*s.begin()));
        });
        Word w1(k, 0);
        std::optional<std::size_t> bad;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) {
                w1[i] = 1;
                if (!bad && !contains(m, inst.generators[i].cls)) bad = i;
            }
        if (!bad) continue;
        out.verdict = Verdict::fails;
        if (contains(m, inst.word_class(w1))) ++w1[*bad];
        out.witness = w1;
        out.reason = "strong existence fails";
        return out;
    }
    out.verdict = out.uniqueness ? Verdict::holds : Verdict::fails;
    if (!out.uniqueness) out.reason = "Phi_L is not injective";
    return out;
}

ExtensionReport extension_report(const PDInstance& inst, const IntMatrix& a_gens) {
    Lattices lat(inst);
    if (a_gens.rows() != lat.dim()) throw InputError("subgroup generators have the wrong length");
    const IntMatrix rel = basis_of(lat.relations());
    const IntMatrix a = basis_of(hcat(a_gens, lat.relations()));
    auto row = [&](const std::string& name, const IntMatrix& c) {
        ExtensionRow r;
        r.lambda = name;
        const IntMatrix sub = intersect(c, a);
        const IntMatrix image = basis_of(hcat(c, a));
        r.whole = lattice_quotient(c, rel);
        r.sub = lattice_quotient(sub, rel);
        r.quotient = lattice_quotient(image, a);
        // The sub row lands in C and dies in C/A; C/sub matching the image forces ker = im
        // since finitely generated abelian groups are Hopfian.
        r.exact = contains(c, sub) && contains(a, sub) && lattice_quotient(c, sub) == r.quotient;
        return r;
    };
    ExtensionReport out;
    out.delta = row("", lat.delta());
    for (const auto& rep : inst.star_classes()) {
        out.primary.push_back(row(rep, lat.primary(rep)));
        out.coprime.push_back(row(rep, lat.coprime(rep)));
    }
    return out;
}

namespace {

Generator gen(std::string name, std::map<std::string, int> chi, long cls, Word negation) {
    Generator g;
    g.name = std::move(name);
    g.chi = std::move(chi);
    g.cls = IntVector::Constant(1, Integer(cls));
    g.negation = std::move(negation);
    return g;
}

}  // namespace

PDInstance example_left_not_right() {
    PDInstance p;
    p.irreducibles = {{"lambda", "lambda"}, {"mu", "mu"}, {"nu", "nu"}};
    p.free_rank = 1;
    p.generators = {gen("K", {{"lambda", 1}}, 1, {0, 1, 0, 0}), gen("K'", {{"lambda", 1}}, -1, {1, 0, 0, 0}),
                    gen("J", {{"mu", 1}, {"nu", 1}}, 1, {0, 0, 0, 1}),
                    gen("J'", {{"mu", 1}, {"nu", 1}}, -1, {0, 0, 1, 0})};
    return p;
}

PDInstance example_right_not_left() {
    PDInstance p;
    p.irreducibles = {{"lambda", "lambda"}, {"mu", "mu"}, {"nu", "nu"}};
    p.free_rank = 1;
    p.generators = {gen("K", {{"lambda", 1}, {"mu", 1}}, 1, {0, 1, 0, 0}),
                    gen("K'", {{"lambda", 1}, {"mu", 1}}, -1, {1, 0, 0, 0}),
                    gen("J", {{"mu", 1}, {"nu", 1}}, 1, {0, 0, 0, 1}),
                    gen("J'", {{"mu", 1}, {"nu", 1}}, -1, {0, 0, 1, 0})};
    return p;
}

PDInstance random_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    PDInstance p;
    const long classes = pick(1, 3);
    std::vector<std::vector<std::string>> members;
    for (long c = 0; c < classes; ++c) {
        const std::string name = "l" + std::to_string(c);
        if (pick(0, 1)) {
            p.irreducibles.push_back({name, name});
            members.push_back({name});
        } else {
            p.irreducibles.push_back({name, name + "*"});
            p.irreducibles.push_back({name + "*", name});
            members.push_back({name, name + "*"});
        }
    }
    p.free_rank = pick(0, 2);
    const long b = pick(1, 6);
    if (b > 1) p.torsion.push_back(b);
    const long base = pick(1, 4);
    const std::size_t k = std::size_t(2 * base);
    for (long i = 0; i < base; ++i) {
        std::map<std::string, int> chi;
        // sparse exponents so that primary generators are common
        for (long c = 0; c < classes; ++c) {
            const long e = pick(0, 5) < 3 ? 0 : pick(1, 2);
            if (e)
                for (const auto& m : members[std::size_t(c)]) chi[m] = int(e);
        }
        IntVector cls(p.dimension());
        for (long j = 0; j < p.free_rank; ++j) cls(j) = Integer(pick(-2, 2));
        if (b > 1) cls(p.free_rank) = Integer(pick(0, b - 1));
        Word to_partner(k, 0), to_self(k, 0);
        to_partner[std::size_t(2 * i + 1)] = 1;
        to_self[std::size_t(2 * i)] = 1;
        Generator g{"g" + std::to_string(i), chi, cls, to_partner};
        IntVector neg = -cls;
        if (b > 1) neg(p.free_rank) = mod_pos(neg(p.free_rank), Integer(b));
        Generator h{"g" + std::to_string(i) + "'", chi, neg, to_self};
        p.generators.push_back(std::move(g));
        p.generators.push_back(std::move(h));
    }
    p.validate();
    return p;
}

PDInstance instance_from_polynomials(const std::vector<std::pair<LaurentPoly, IntVector>>& gens, long free_rank,
                                     const std::vector<Integer>& torsion) {
    PDInstance p;
    p.free_rank = free_rank;
    p.torsion = torsion;
    std::vector<LaurentPoly> known;
    auto label = [&](const LaurentPoly& f) -> std::string {
        for (std::size_t i = 0; i < known.size(); ++i)
            if (are_associates(known[i], f)) return p.irreducibles[i].name;
        const LaurentPoly c = canonical_associate(f), s = canonical_associate(star(f));
        if (c == s) {
            known.push_back(c);
            p.irreducibles.push_back({c.to_string(), c.to_string()});
        } else {
            known.push_back(c);
            known.push_back(s);
            p.irreducibles.push_back({c.to_string(), s.to_string()});
            p.irreducibles.push_back({s.to_string(), c.to_string()});
        }
        return c.to_string();
    };
    int idx = 0;
    for (const auto& [f, cls] : gens) {
        if (f.is_zero()) throw InputError("zero invariant");
        Generator g;
        g.name = "g" + std::to_string(idx++);
        g.cls = cls;
        for (const auto& [factor, e] : factor_rational_poly(f).factors) g.chi[label(factor)] += e;
        p.generators.push_back(std::move(g));
    }
    p.validate();
    return p;
}

}  // namespace concord
