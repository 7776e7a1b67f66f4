// Command-line driver. Exit codes: 0 ok, 1 a check failed, 2 bad input, 3 beyond capability.

#include "io.hpp"

#include "concord/errors.hpp"
#include "concord/exact/linalg.hpp"
#include "concord/knots.hpp"
#include "concord/linkforms.hpp"
#include "concord/pdcore.hpp"
#include "concord/plumbing.hpp"
#include "concord/spinc.hpp"
#include "concord/verify.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iomanip>
#include <iostream>
#include <map>

using namespace concord;
using io::json;

namespace {

struct Options {
    bool json_out = false;
    int jobs = 1;
    long bound = 8;
    bool positive = false;
};

Options opt;

void emit(const json& j, const std::function<void()>& human) {
    if (opt.json_out)
        std::cout << j.dump() << "\n";
    else
        human();
}

void print_matrix(const RatMatrix& m, const std::vector<std::string>& labels = {}) {
    std::vector<std::size_t> width(std::size_t(m.cols()), 1);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            width[std::size_t(j)] = std::max(width[std::size_t(j)], to_string(m(i, j)).size());
    std::size_t lw = 0;
    for (const auto& l : labels) lw = std::max(lw, l.size());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (!labels.empty()) std::cout << std::left << std::setw(int(lw + 2)) << labels[std::size_t(i)] << std::right;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            std::cout << std::setw(int(width[std::size_t(j)] + 1)) << to_string(m(i, j));
        std::cout << "\n";
    }
}

int print_report(const VerificationReport& r) {
    emit(io::to_json(r), [&] {
        std::size_t ws = 7, wn = 4;
        for (const auto& c : r.checks) {
            ws = std::max(ws, c.subject.size());
            wn = std::max(wn, c.name.size());
        }
        for (const auto& c : r.checks) {
            std::cout << std::left << std::setw(8) << to_string(c.status) << std::setw(int(ws + 2)) << c.subject
                      << std::setw(int(wn + 2)) << c.name << "computed " << c.computed;
            if (c.status != CheckStatus::pass) std::cout << "  (expected " << c.expected << ")";
            std::cout << "\n";
        }
        long pass = 0, fail = 0, flagged = 0;
        for (const auto& c : r.checks)
            (c.status == CheckStatus::pass ? pass : c.status == CheckStatus::fail ? fail : flagged)++;
        std::cout << pass << " passed, " << fail << " failed, " << flagged << " flagged\n";
    });
    return r.exit_code();
}

json hom_json(const HomReport& h) {
    return {{"domain", io::to_json(h.domain)},
            {"codomain", io::to_json(h.codomain)},
            {"injective", h.injective},
            {"surjective", h.surjective},
            {"completeness", h.exact ? "exact" : "bounded"}};
}

json analyze(PDInstance p) {
    p.validate(opt.bound);
    json out;
    out["instance"] = io::to_json(p);
    auto d = delta_subgroup(p);
    out["delta"] = {{"group", io::to_json(d.group)}, {"completeness", d.exact ? "exact" : "bounded"}};
    json parts = json::array();
    for (const auto& rep : p.star_classes()) {
        auto [c, cu] = primary_and_coprime_subgroups(p, rep);
        parts.push_back({{"lambda", rep}, {"primary", io::to_json(c.group)}, {"coprime", io::to_json(cu.group)}});
    }
    out["subgroups"] = parts;
    out["phi_L"] = hom_json(phi_L(p));
    out["phi_R"] = hom_json(phi_R(p));
    auto s = strong_pd_check(p);
    out["strong_pd"] = {{"verdict", to_string(s.verdict)}, {"uniqueness", s.uniqueness}, {"reason", s.reason}};
    if (s.witness) out["strong_pd"]["witness"] = *s.witness;
    return out;
}

void print_analysis(const json& a) {
    std::cout << "Delta = " << a["delta"]["group"]["text"].get<std::string>() << "\n";
    for (const auto& part : a["subgroups"])
        std::cout << "C_" << part["lambda"].get<std::string>() << " = " << part["primary"]["text"].get<std::string>()
                  << ", C^" << part["lambda"].get<std::string>() << " = "
                  << part["coprime"]["text"].get<std::string>() << "\n";
    for (const char* name : {"phi_L", "phi_R"}) {
        const auto& h = a[name];
        std::cout << name << ": " << h["domain"]["text"].get<std::string>() << " -> "
                  << h["codomain"]["text"].get<std::string>() << ", injective " << h["injective"]
                  << ", surjective " << h["surjective"] << "\n";
    }
    std::cout << "strong primary decomposition: " << a["strong_pd"]["verdict"].get<std::string>();
    if (a["strong_pd"].contains("witness")) std::cout << ", witness word " << a["strong_pd"]["witness"].dump();
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for concordance invariants of the plumbed family"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opt.json_out, "Line-delimited JSON output");
    app.add_option("--jobs", opt.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--bound", opt.bound, "Search bound")->check(CLI::NonNegativeNumber);
    app.add_flag("--positive", opt.positive, "Use +v^T L^-1 w for linking forms");
    std::function<int()> run;

    // verify-paper
    long m = 23, n = 2;
    auto* verify = app.add_subcommand("verify-paper", "Re-derive every number of the family at m");
    verify->add_option("--m", m, "Odd m >= 3")->required();
    verify->add_option("--n", n, "n in the rho budget (>= 2)");
    verify->callback([&] { run = [&] { return print_report(verify_paper(m, n)); }; });

    long from = 3, to = 35;
    auto* scan = app.add_subcommand("assertion-scan", "Delta_i >= 0 for k_1 and k_2 over a range of m");
    scan->add_option("--from", from)->required();
    scan->add_option("--to", to)->required();
    scan->callback([&] { run = [&] { return print_report(assertion_scan(from, to, opt.jobs)); }; });

    auto* budget = app.add_subcommand("rho-budget", "69713280 (6n + 8m + 86)");
    budget->add_option("--n", n)->required();
    budget->add_option("--m", m)->required();
    budget->callback([&] {
        run = [&] {
            const Integer b = rho_budget(n, m);
            emit({{"n", n}, {"m", m}, {"budget", to_string(b)}}, [&] { std::cout << to_string(b) << "\n"; });
            return 0;
        };
    });

    // plumbing
    std::string graph_file, rep_file;
    auto* plumbing = app.add_subcommand("plumbing", "Star-shaped plumbing graphs");
    plumbing->require_subcommand(1);
    for (const char* name : {"form", "euler", "check"}) {
        auto* sub = plumbing->add_subcommand(name);
        sub->add_option("--graph", graph_file, "Graph JSON file")->required();
        const std::string which = name;
        sub->callback([&, which] {
            run = [&, which] {
                const PlumbingGraph g = io::graph_from(io::read_json(graph_file));
                if (which == "form") {
                    const IntMatrix f = intersection_form(g);
                    emit({{"labels", g.basis_labels()}, {"matrix", io::to_json(f)}},
                         [&] { print_matrix(to_rational(f), g.basis_labels()); });
                } else if (which == "euler") {
                    const Rational e = orbifold_euler(g);
                    emit({{"e", to_string(e)}}, [&] { std::cout << "e = " << to_string(e) << "\n"; });
                } else {
                    const bool definite = is_negative_definite(g);
                    const Integer det = determinant(intersection_form(g));
                    emit({{"negative_definite", definite}, {"e", to_string(orbifold_euler(g))},
                          {"H1_order", to_string(mp::abs(det))}},
                         [&] {
                             std::cout << "e = " << to_string(orbifold_euler(g)) << ", negative definite: "
                                       << (definite ? "yes" : "no") << ", |H_1| = " << to_string(mp::abs(det))
                                       << "\n";
                         });
                }
                return 0;
            };
        });
    }

    // spinc
    bool c1_zero = false;
    auto* spinc = app.add_subcommand("spinc", "Spin^c structures and d-invariants");
    spinc->require_subcommand(1);
    auto* spinc_d = spinc->add_subcommand("d", "d-invariant of a representative");
    spinc_d->add_option("--graph", graph_file)->required();
    spinc_d->add_option("--rep", rep_file)->required();
    spinc_d->callback([&] {
        run = [&] {
            const PlumbingGraph g = io::graph_from(io::read_json(graph_file));
            const SpinCRep r = io::rep_from(io::read_json(rep_file), g);
            const CharVector k = char_vector(g, r);
            const bool dist = is_distinguished(g, r);
            const Rational via_class = class_d_invariant(g, k);
            json j = {{"distinguished", dist}, {"k_square", to_string(k_square(g, k))},
                      {"class", spinc_class(g, k).to_string()}, {"d", to_string(via_class)}};
            if (dist) {
                const Rational direct = d_invariant(g, r);
                if (direct != via_class) throw InvariantViolation("d from the representative and from its class differ");
                j["min_tau"] = to_string(tau_min(g, r).minimum);
            }
            emit(j, [&] {
                std::cout << "class " << j["class"].get<std::string>() << ", k^2 = " << j["k_square"].get<std::string>()
                          << ", distinguished: " << (dist ? "yes" : "no") << ", d = " << to_string(via_class) << "\n";
            });
            return 0;
        };
    });
    auto* spinc_classes = spinc->add_subcommand("classes", "List spin^c classes with d-invariants");
    spinc_classes->add_option("--graph", graph_file)->required();
    spinc_classes->add_flag("--c1-zero", c1_zero, "Only classes with vanishing c_1");
    spinc_classes->callback([&] {
        run = [&] {
            const PlumbingGraph g = io::graph_from(io::read_json(graph_file));
            json rows = json::array();
            if (c1_zero) {
                for (const auto& c : c1_zero_classes(g))
                    rows.push_back({{"class", c.cls.to_string()}, {"d", to_string(class_d_invariant(g, c.k))}});
            } else {
                for (const auto& r : all_distinguished(g)) {
                    const CharVector k = char_vector(g, r);
                    rows.push_back({{"class", spinc_class(g, k).to_string()}, {"rep", io::to_json(r)},
                                    {"d", to_string(d_invariant(g, r))}});
                }
            }
            emit(rows, [&] {
                for (const auto& r : rows)
                    std::cout << std::left << std::setw(24) << r["class"].get<std::string>() << " d = "
                              << r["d"].get<std::string>() << "\n";
            });
            return 0;
        };
    });

    // lens
    long p = 0, q = 1, index = -1;
    bool all = false;
    auto* lens = app.add_subcommand("lens", "d-invariants of lens spaces L(p,q)");
    lens->add_option("--p", p)->required();
    lens->add_option("--q", q)->required();
    auto* idx_opt = lens->add_option("--index", index);
    lens->add_flag("--all", all)->excludes(idx_opt);
    lens->callback([&] {
        run = [&] {
            if (p < 1 || q < 0) throw InputError("need p >= 1 and q >= 0");
            json rows = json::array();
            if (all) {
                for (long i = 0; i < p; ++i) rows.push_back({{"index", i}, {"d", to_string(lens_d(p, q, i))}});
            } else {
                const Integer i = index >= 0 ? Integer(index) : lens_canonical_index(p, q);
                rows.push_back({{"index", i.convert_to<long>()}, {"d", to_string(lens_d(p, q, i))}});
            }
            emit(rows, [&] {
                for (const auto& r : rows) std::cout << "d(L(" << p << "," << q << ")," << r["index"] << ") = "
                                                     << r["d"].get<std::string>() << "\n";
            });
            return 0;
        };
    });

    // knot
    std::string seifert_file;
    long d = 2, r = 2, k = 0;
    auto* knot = app.add_subcommand("knot", "Seifert matrix invariants");
    knot->require_subcommand(1);
    auto seifert = [&] {
        const IntMatrix s = io::int_matrix_from(io::read_json(seifert_file));
        validate_seifert(s);
        return s;
    };
    auto knot_sub = [&](const char* name, const char* help, std::function<int()> body) {
        auto* sub = knot->add_subcommand(name, help);
        sub->add_option("--seifert", seifert_file, "Seifert matrix JSON file")->required();
        sub->callback([&run, body] { run = body; });
        return sub;
    };
    knot_sub("alex", "Alexander polynomial", [&] {
        const LaurentPoly a = alexander_polynomial(seifert());
        emit({{"alexander", io::to_json(a)}, {"text", a.to_string()}}, [&] { std::cout << a.to_string() << "\n"; });
        return 0;
    });
    auto* sig = knot_sub("sig", "Levine-Tristram signatures at d-th roots of unity", [&] {
        const IntMatrix s = seifert();
        if (d < 1) throw InputError("--d must be positive");
        json rows = json::array();
        for (long kk = (k > 0 ? k : 1); kk <= (k > 0 ? k : d - 1); ++kk)
            rows.push_back({{"k", kk}, {"d", d}, {"signature", lt_signature(s, kk, d)}});
        emit(rows, [&] {
            for (const auto& row : rows) std::cout << "sigma(" << row["k"] << "/" << d << ") = " << row["signature"] << "\n";
        });
        return 0;
    });
    sig->add_option("--d", d);
    sig->add_option("--k", k, "Single numerator k (default: all 1..d-1)");
    auto* rho = knot_sub("rho", "Average of signatures over d-th roots of unity", [&] {
        const Rational v = rho_zd(seifert(), d);
        emit({{"d", d}, {"rho", to_string(v)}}, [&] { std::cout << "rho(Z_" << d << ") = " << to_string(v) << "\n"; });
        return 0;
    });
    rho->add_option("--d", d);
    auto* cover = knot_sub("cover", "H_1 of the r-fold branched cover", [&] {
        const AbelianGroup h = branched_cover_homology(seifert(), r);
        emit({{"r", r}, {"H1", io::to_json(h)}}, [&] { std::cout << "H_1(Sigma_" << r << ") = " << h.to_string() << "\n"; });
        return 0;
    });
    cover->add_option("--r", r);
    knot_sub("metabolizers", "Metabolizers of the rational Blanchfield form", [&] {
        const auto ms = blanchfield_metabolizers(seifert());
        json rows = json::array();
        for (const auto& mz : ms) {
            json sums = json::array();
            for (const auto& f : mz.summands) sums.push_back(f.to_string());
            rows.push_back({{"summands", sums}, {"basis", io::to_json(mz.basis)}});
        }
        emit({{"count", ms.size()}, {"metabolizers", rows}}, [&] {
            std::cout << ms.size() << " metabolizer(s)\n";
            for (const auto& row : rows) std::cout << "  generated by " << row["summands"].dump() << "\n";
        });
        return 0;
    });
    knot_sub("foxmilnor", "Factor Delta ~ f f* if possible", [&] {
        const auto f = fox_milnor_factor(alexander_polynomial(seifert()));
        json j = {{"factorable", f.has_value()}};
        if (f) j["f"] = io::to_json(*f);
        emit(j, [&] { std::cout << (f ? "f = " + f->to_string() : std::string("no factorization f f*")) << "\n"; });
        return 0;
    });

    // linkform
    std::string matrix_file, form_file;
    auto* linkform = app.add_subcommand("linkform", "Linking forms on finite abelian groups");
    linkform->require_subcommand(1);
    auto* from_matrix = linkform->add_subcommand("from-matrix", "Linking form of a symmetric matrix");
    from_matrix->add_option("--matrix", matrix_file)->required();
    from_matrix->callback([&] {
        run = [&] {
            const auto res = form_from_linking_matrix(io::int_matrix_from(io::read_json(matrix_file)),
                                                      opt.positive ? LinkSign::positive : LinkSign::negative);
            emit(io::to_json(res.form), [&] {
                std::cout << "group " << res.form.group().to_string() << "\n";
                print_matrix(res.form.pairing);
            });
            return 0;
        };
    });
    long order_bound = 4096;
    auto* metabolic = linkform->add_subcommand("metabolic", "Search for a metabolizer");
    metabolic->add_option("--form", form_file)->required();
    metabolic->add_option("--order-bound", order_bound, "Largest group order searched");
    metabolic->callback([&] {
        run = [&] {
            const FiniteLinkingForm f = io::form_from(io::read_json(form_file));
            MetabolicOptions mo;
            mo.order_bound = order_bound;
            const auto found = find_metabolizer(f, mo);
            json j = {{"metabolic", found.has_value()}};
            if (found) {
                json gens = json::array();
                for (const auto& g : *found) gens.push_back(io::to_json(IntMatrix(g)));
                j["generators"] = gens;
            }
            emit(j, [&] { std::cout << (found ? "metabolic" : "not metabolic") << "\n"; });
            return 0;
        };
    });
    auto* primary = linkform->add_subcommand("primary", "Primary decomposition");
    primary->add_option("--form", form_file)->required();
    primary->callback([&] {
        run = [&] {
            const auto parts = primary_decompose(io::form_from(io::read_json(form_file)));
            json j = json::object();
            for (const auto& [prime, part] : parts) j[to_string(prime)] = io::to_json(part);
            emit(j, [&] {
                for (const auto& [prime, part] : parts) {
                    std::cout << "p = " << to_string(prime) << ": " << part.group().to_string() << "\n";
                    print_matrix(part.pairing);
                }
            });
            return 0;
        };
    });

    // pd
    std::string instance_file;
    auto* pd = app.add_subcommand("pd", "Primary decomposition framework");
    pd->require_subcommand(1);
    auto* pd_analyze = pd->add_subcommand("analyze", "Subgroups, Phi_L, Phi_R and strong decomposability");
    pd_analyze->add_option("--instance", instance_file)->required();
    pd_analyze->callback([&] {
        run = [&] {
            const json a = analyze(io::instance_from(io::read_json(instance_file)));
            emit(a, [&] { print_analysis(a); });
            return 0;
        };
    });
    auto* fixtures = pd->add_subcommand("fixtures", "The two worked examples");
    fixtures->callback([&] {
        run = [&] {
            const json a = {{"left_not_right", analyze(example_left_not_right())},
                            {"right_not_left", analyze(example_right_not_left())}};
            emit(a, [&] {
                std::cout << "chi(K) = lambda, chi(J) = mu nu\n";
                print_analysis(a["left_not_right"]);
                std::cout << "\nchi(K) = lambda mu, chi(J) = mu nu\n";
                print_analysis(a["right_not_left"]);
            });
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return run ? run() : 0;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const CapabilityError& e) {
        std::cerr << "beyond capability: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
