#include "io.hpp"

#include "concord/errors.hpp"

#include <fstream>
#include <sstream>

namespace concord::io {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

Rational rational_from(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError("expected an integer or a \"p/q\" string, got " + j.dump());
}

Integer integer_from(const json& j) {
    const Rational q = rational_from(j);
    if (den(q) != 1) throw InputError("expected an integer, got " + j.dump());
    return num(q);
}

json to_json(const Rational& q) { return to_string(q); }
json to_json(const Integer& x) { return to_string(x); }

json to_json(const RatMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const IntMatrix& m) { return to_json(to_rational(m)); }

json to_json(const LaurentPoly& f) {
    json out = json::object();
    for (const auto& [e, c] : f.terms()) out[std::to_string(e)] = to_string(c);
    return out;
}

json to_json(const AbelianGroup& g) {
    json t = json::array();
    for (const auto& x : g.torsion) t.push_back(to_string(x));
    return {{"free_rank", g.free_rank}, {"torsion", t}, {"text", g.to_string()}};
}

json to_json(const FiniteLinkingForm& f) {
    json orders = json::array();
    for (const auto& o : f.orders) orders.push_back(to_string(o));
    return {{"orders", orders}, {"pairing", to_json(f.pairing)}};
}

json to_json(const SpinCRep& r) {
    json a = json::array();
    for (const auto& branch : r.a) {
        json row = json::array();
        for (const auto& x : branch) row.push_back(to_string(x));
        a.push_back(row);
    }
    return {{"a0", to_string(r.a0)}, {"a", a}};
}

json to_json(const PDInstance& p) {
    json irr = json::array();
    for (const auto& i : p.irreducibles) irr.push_back({{"name", i.name}, {"star", i.star}});
    json gens = json::array();
    for (const auto& g : p.generators) {
        json cls = json::array();
        for (Eigen::Index i = 0; i < g.cls.size(); ++i) cls.push_back(g.cls(i).convert_to<long long>());
        json item = {{"name", g.name}, {"chi", g.chi}, {"class", cls}};
        if (g.negation) item["negation"] = *g.negation;
        gens.push_back(item);
    }
    json torsion = json::array();
    for (const auto& t : p.torsion) torsion.push_back(t.convert_to<long long>());
    return {{"irreducibles", irr}, {"generators", gens}, {"group", {{"free_rank", p.free_rank}, {"torsion", torsion}}}};
}

json to_json(const Check& c) {
    return {{"name", c.name}, {"subject", c.subject}, {"expected", c.expected}, {"computed", c.computed},
            {"status", to_string(c.status)}};
}

json to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"checks", checks}, {"exit_code", r.exit_code()}};
}

namespace {

template <class S, class F>
Mat<S> matrix_from(const json& j, F convert) {
    if (!j.is_array()) throw InputError("expected a matrix (array of arrays)");
    const auto rows = Eigen::Index(j.size());
    const Eigen::Index cols = rows ? Eigen::Index(j[0].size()) : 0;
    Mat<S> m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json& row = j[std::size_t(i)];
        if (!row.is_array() || Eigen::Index(row.size()) != cols) throw InputError("ragged matrix");
        for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = convert(row[std::size_t(k)]);
    }
    return m;
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
    return j.at(name);
}

}  // namespace

IntMatrix int_matrix_from(const json& j) { return matrix_from<Integer>(j, integer_from); }
RatMatrix rat_matrix_from(const json& j) { return matrix_from<Rational>(j, rational_from); }

PlumbingGraph graph_from(const json& j) {
    try {
        PlumbingGraph g;
        g.e0 = field(j, "e0").get<long>();
        g.branches = field(j, "branches").get<std::vector<std::vector<long>>>();
        g.validate();
        return g;
    } catch (const json::exception& e) {
        throw InputError(std::string("graph: ") + e.what());
    }
}

SpinCRep rep_from(const json& j, const PlumbingGraph& g) {
    SpinCRep r;
    r.a0 = integer_from(field(j, "a0"));
    for (const auto& branch : field(j, "a")) {
        std::vector<Integer> row;
        for (const auto& x : branch) row.push_back(integer_from(x));
        r.a.push_back(row);
    }
    if (r.a.size() != g.branches.size()) throw InputError("rep: branch count does not match the graph");
    for (std::size_t l = 0; l < r.a.size(); ++l)
        if (r.a[l].size() != g.branches[l].size()) throw InputError("rep: branch length does not match the graph");
    return r;
}

FiniteLinkingForm form_from(const json& j) {
    FiniteLinkingForm f;
    for (const auto& o : field(j, "orders")) f.orders.push_back(integer_from(o));
    f.pairing = rat_matrix_from(field(j, "pairing"));
    if (f.pairing.rows() != Eigen::Index(f.orders.size()) || f.pairing.cols() != f.pairing.rows())
        throw InputError("form: pairing must be square with one row per order");
    for (Eigen::Index i = 0; i < f.pairing.rows(); ++i)
        for (Eigen::Index k = 0; k < f.pairing.cols(); ++k) f.pairing(i, k) = mod_one(f.pairing(i, k));
    f.validate();
    return f;
}

PDInstance instance_from(const json& j) {
    try {
        PDInstance p;
        for (const auto& i : field(j, "irreducibles")) {
            const std::string name = field(i, "name").get<std::string>();
            p.irreducibles.push_back({name, i.value("star", name)});
        }
        const json& group = field(j, "group");
        p.free_rank = group.value("free_rank", 0L);
        for (const auto& t : group.value("torsion", json::array())) p.torsion.push_back(integer_from(t));
        int idx = 0;
        for (const auto& g : field(j, "generators")) {
            Generator gen;
            gen.name = g.value("name", "g" + std::to_string(idx));
            ++idx;
            gen.chi = g.value("chi", std::map<std::string, int>{});
            const json& cls = field(g, "class");
            gen.cls = IntVector(Eigen::Index(cls.size()));
            for (std::size_t i = 0; i < cls.size(); ++i) gen.cls(Eigen::Index(i)) = integer_from(cls[i]);
            if (g.contains("negation")) gen.negation = g.at("negation").get<Word>();
            p.generators.push_back(std::move(gen));
        }
        return p;
    } catch (const json::exception& e) {
        throw InputError(std::string("instance: ") + e.what());
    }
}

}  // namespace concord::io
