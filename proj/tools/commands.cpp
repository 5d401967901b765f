#include "commands.hpp"

#include "hh/formulas.hpp"
#include "hh/oracle.hpp"
#include "hh/verification.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <typeinfo>

namespace hhcli {

using namespace hh;

namespace {

struct Session {
    Algebra A;
    Resolution R;
    HomComplex H;
    explicit Session(const Params& p) : A(p.m, p.N, Field::create(p.characteristic)), R(A), H(R) {}
};

json params_json(const Params& p) { return {{"m", p.m}, {"N", p.N}, {"char", p.characteristic}}; }

json document(const Params& p, const std::string& suite) {
    return {{"params", params_json(p)}, {"suite", suite}, {"results", json::array()}, {"failures", json::array()}};
}

template <class F>
json optional_long(F&& f) {
    try {
        return f();
    } catch (const UnsupportedM&) {
    } catch (const NoClosedForm&) {
    }
    return nullptr;
}

std::string coords_string(const Vector& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].to_string();
    return s + "]";
}

std::string expanded(const RelationExpr& r, int m) {
    std::string s;
    for (std::size_t k = 0; k < r.sides.size(); ++k) s += (k ? " = " : "") + to_string(r.sides[k], m);
    return s;
}

int default_cap(const std::string& suite, int m) {
    if (suite == "generation") return 2 * m + 2;
    if (suite == "quotient") return hh::default_cap(m);
    return 2 * m + 3;
}

void relations_suite(Session& S, Evaluator& E, json& doc) {
    const FixtureParams FP = FixtureParams::of(S.A);
    std::vector<RelationExpr> rels = load_presentation(presentation_file(S.A), FP).relations;
    if (S.A.m() >= 4 && S.A.m() % 2 == 0 && S.A.N() > 1)
        for (auto& r : load_relations(data_dir() + "/relations/lemmas_m_even.txt", FP)) rels.push_back(r);
    for (const RelationExpr& r : rels) {
        json row{{"suite", "relations"}, {"item", r.text}, {"expanded", expanded(r, S.A.m())}};
        try {
            RelationResult res = verify_relation(E, r);
            row["n"] = res.degree;
            row["computed"] = res.holds;
            row["formula"] = true;
            row["match"] = res.holds;
            if (!res.message.empty()) row["message"] = res.message;
            if (!res.holds) doc["failures"].push_back(r.text + ": " + res.message);
        } catch (const DegreeMismatch& e) {
            row["n"] = nullptr;
            row["computed"] = nullptr;
            row["formula"] = true;
            row["match"] = false;
            row["message"] = e.what();
            doc["failures"].push_back(r.text + ": " + e.what());
        }
        doc["results"].push_back(row);
    }
}

void generation_suite(Session& S, Evaluator& E, int cap, json& doc) {
    Presentation P = load_presentation(presentation_file(S.A), FixtureParams::of(S.A));
    GenerationReport g = verify_generation(E, P.generators, cap);
    for (const auto& d : g.degrees)
        doc["results"].push_back({{"suite", "generation"},
                                  {"n", d.d},
                                  {"computed", d.span},
                                  {"formula", d.hh},
                                  {"match", d.pass},
                                  {"item", "span of products"}});
    if (!g.pass) doc["failures"].push_back("generation: " + g.message);
}

void quotient_suite(Session& S, Evaluator& E, int cap, json& doc) {
    Presentation P = load_presentation(presentation_file(S.A), FixtureParams::of(S.A));
    QuotientReport q = verify_quotient_mod_nilpotence(E, P, cap);
    const int m = S.A.m();
    for (const auto& g : q.generators) {
        json row{{"suite", "quotient"}, {"n", E.degree(g.generator)}, {"item", "nilpotence of " + to_string(g.generator, m)}};
        bool nil = std::holds_alternative<NilpotentAt>(g.result);
        row["computed"] = nil ? "nilpotent at " + std::to_string(std::get<NilpotentAt>(g.result).k)
                              : "nonzero up to " + std::to_string(std::get<NonzeroUpTo>(g.result).cap);
        row["formula"] = g.expected_nilpotent ? "nilpotent" : "not nilpotent";
        row["match"] = g.ok;
        if (!g.ok) doc["failures"].push_back("quotient: " + std::string(row["item"]) + " is " + std::string(row["computed"]));
        doc["results"].push_back(row);
    }
    for (std::size_t k = 0; k < q.relations.size(); ++k) {
        const RelationResult& r = q.relations[k];
        doc["results"].push_back({{"suite", "quotient"},
                                  {"n", r.degree},
                                  {"item", r.text},
                                  {"expanded", expanded(P.quotient_relations[k], m)},
                                  {"computed", r.holds},
                                  {"formula", true},
                                  {"match", r.holds}});
        if (!r.holds) doc["failures"].push_back("quotient relation " + r.text + ": " + r.message);
    }
    for (const auto& d : q.degrees) {
        doc["results"].push_back({{"suite", "quotient"},
                                  {"n", d.d},
                                  {"item", "non-nilpotent classes vs Hilbert count"},
                                  {"computed", static_cast<long>(d.combined - d.ideal)},
                                  {"formula", d.expected},
                                  {"match", d.pass},
                                  {"hh", d.hh},
                                  {"ideal", d.ideal},
                                  {"monomials", d.monomials}});
        if (!d.pass) {
            std::string why = static_cast<long>(d.combined - d.ideal) != d.expected
                                  ? std::to_string(d.combined - d.ideal) + " non-nilpotent classes, Hilbert count " +
                                        std::to_string(d.expected)
                                  : "ideal + monomials span " + std::to_string(d.combined) + " of dim HH " + std::to_string(d.hh);
            doc["failures"].push_back("quotient degree " + std::to_string(d.d) + ": " + why);
        }
    }
}

void resolution_suite(Session& S, int cap, json& doc) {
    for (const auto& d : S.R.exactness_check(cap)) {
        doc["results"].push_back({{"suite", "resolution"},
                                  {"n", d.n},
                                  {"item", "rank of the differential"},
                                  {"computed", d.rank},
                                  {"formula", d.expected},
                                  {"match", d.pass},
                                  {"complex_ok", d.complex_ok}});
        if (!d.pass)
            doc["failures"].push_back("resolution degree " + std::to_string(d.n) + (d.complex_ok ? ": not exact" : ": d^2 != 0"));
    }
}

std::string csv_cell(const json& v) {
    if (v.is_null()) return "";
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    return s;
}

std::string cell_text(const json& v) {
    if (v.is_null()) return "-";
    return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

void validate(const Params& p) {
    if (p.m < 1) throw UsageError("--m must be at least 1");
    if (p.N < 1) throw UsageError("--N must be at least 1");
    try {
        Field::create(p.characteristic);
    } catch (const CompositeCharacteristic& e) {
        throw UsageError(e.what());
    }
}

json dims(const Params& p, int max_degree, bool check_formulas, std::optional<int> oracle_max) {
    validate(p);
    if (max_degree < 0) throw UsageError("--max-degree must be non-negative");
    Session S(p);
    json doc = document(p, "dims");
    doc["check_formulas"] = check_formulas;
    for (int n = 0; n <= max_degree; ++n) {
        json row{{"n", n}, {"computed", S.H.hh_dimension(n)}};
        row["formula"] = optional_long([&] { return hh_dim_formula(p.m, p.N, p.characteristic, n); });
        bool match = row["formula"].is_null() || row["formula"].get<long>() == row["computed"].get<long>();
        if (check_formulas) {
            row["hom"] = S.H.space(n).dimension();
            row["hom_formula"] = hom_dim_formula(p.m, p.N, n);
            row["kernel"] = S.H.kernel_dimension(n);
            row["kernel_formula"] = optional_long([&] { return kernel_dim_formula(p.m, p.N, p.characteristic, n); });
            match = match && row["hom"].get<long>() == row["hom_formula"].get<long>();
            if (!row["kernel_formula"].is_null()) match = match && row["kernel"].get<long>() == row["kernel_formula"].get<long>();
        }
        if (oracle_max && n <= *oracle_max) {
            try {
                row["oracle"] = bar_hh_dimension(S.A, n);
                match = match && row["oracle"] == row["computed"];
            } catch (const TooLarge& e) {
                row["oracle"] = nullptr;
                row["oracle_note"] = e.what();
            }
        }
        row["match"] = row["formula"].is_null() && !row.contains("oracle") && !check_formulas ? json(nullptr) : json(match);
        if (!match && (check_formulas || row.contains("oracle")))
            doc["failures"].push_back("degree " + std::to_string(n) + ": computed " + row["computed"].dump() +
                                      ", formula " + row["formula"].dump());
        doc["results"].push_back(row);
    }
    return doc;
}

json centre(const Params& p) {
    validate(p);
    Session S(p);
    json doc = document(p, "centre");
    const auto computed = S.A.centre();
    const auto formula = centre_basis_formula(S.A);
    std::vector<Vector> cols;
    bool central = true;
    for (const auto& e : formula) {
        central = central && S.A.is_central(e.value);
        Vector v(S.A.dimension(), S.A.field().zero());
        for (const auto& [path, c] : e.value.terms) v[path] = c;
        cols.push_back(v);
        doc["centre_formula"].push_back({{"label", e.label}, {"value", S.A.render(e.value)}, {"central", S.A.is_central(e.value)}});
    }
    for (const auto& z : computed) doc["computed_basis"].push_back(S.A.render(z));
    const std::size_t r = cols.empty() ? 0 : rank(Matrix::from_columns(cols, S.A.dimension(), S.A.field()));
    const bool spans = central && r == formula.size() && r == computed.size();
    doc["hh0"] = S.H.hh_dimension(0);
    doc["results"].push_back({{"n", 0}, {"computed", computed.size()}, {"formula", formula.size()}, {"match", spans}});
    if (!spans) doc["failures"].push_back("centre formula does not span the computed centre");
    if (S.H.hh_dimension(0) != computed.size()) doc["failures"].push_back("dim HH^0 differs from the centre");
    return doc;
}

json basis(const Params& p, int degree) {
    validate(p);
    if (degree < 0) throw UsageError("--degree must be non-negative");
    Session S(p);
    json doc = document(p, "basis");
    doc["degree"] = degree;
    for (const auto& id : paper_basis(S.A, degree)) doc["ids"].push_back(to_string(id, p.m));
    if (!doc.contains("ids")) doc["ids"] = json::array();
    BasisReport r = verify_paper_basis(S.H, degree);
    doc["report"] = {{"family_size", r.family_size}, {"hh_dimension", r.hh_dimension}, {"class_rank", r.class_rank},
                     {"all_cocycles", r.all_cocycles}, {"independent", r.independent}, {"cardinality", r.cardinality},
                     {"pass", r.pass}, {"message", r.message}};
    if (r.offending) doc["report"]["offending"] = to_string(*r.offending, p.m);
    doc["results"].push_back({{"n", degree}, {"computed", r.class_rank}, {"formula", r.hh_dimension}, {"match", r.pass}});
    if (!r.pass) doc["failures"].push_back("degree " + std::to_string(degree) + ": " + r.message);
    return doc;
}

json product(const Params& p, const std::string& left, const std::string& right) {
    validate(p);
    Session S(p);
    const NamedCocycleId a = parse_cocycle_id(left, p.m), b = parse_cocycle_id(right, p.m);
    Products P(S.H);
    Cochain c = P.cup(named_cocycle(S.H, a), named_cocycle(S.H, b));
    Vector v = S.H.reduce_mod_coboundaries(c);
    json doc = document(p, "product");
    doc["left"] = to_string(a, p.m);
    doc["right"] = to_string(b, p.m);
    doc["degree"] = c.n;
    json coords = json::array();
    for (const auto& x : v) coords.push_back(x.to_string());
    doc["coordinates"] = coords;
    doc["zero"] = is_zero(v);
    std::optional<std::vector<std::pair<NamedCocycleId, Scalar>>> dec;
    try {
        dec = named_decomposition(S.H, c.n, v);
    } catch (const NoClosedForm&) {
    }
    if (dec) {
        doc["decomposition"] = json::array();
        for (const auto& [id, s] : *dec) doc["decomposition"].push_back({{"id", to_string(id, p.m)}, {"coefficient", s.to_string()}});
    } else {
        doc["decomposition"] = nullptr;
    }
    doc["results"].push_back({{"n", c.n}, {"computed", coords_string(v)}, {"formula", nullptr}, {"match", nullptr}});
    return doc;
}

json verify(const Params& p, const std::string& suite, int cap) {
    validate(p);
    static const std::vector<std::string> all{"relations", "generation", "quotient", "resolution"};
    std::vector<std::string> run;
    if (suite == "all")
        run = all;
    else if (std::find(all.begin(), all.end(), suite) != all.end())
        run = {suite};
    else
        throw UsageError("unknown suite '" + suite + "'");
    Session S(p);
    Evaluator E(S.H);
    json doc = document(p, suite);
    for (const auto& s : run) {
        const int c = cap >= 0 ? cap : default_cap(s, p.m);
        doc["caps"][s] = c;
        if (s == "relations") relations_suite(S, E, doc);
        if (s == "generation") generation_suite(S, E, c, doc);
        if (s == "quotient") quotient_suite(S, E, c, doc);
        if (s == "resolution") resolution_suite(S, c, doc);
    }
    return doc;
}

GridAxis parse_grid(const std::string& text) {
    GridAxis g;
    std::stringstream all(text);
    std::string part;
    auto values = [](const std::string& name, const std::string& list) {
        std::vector<long> out;
        std::stringstream ss(list);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                const auto dots = item.find("..");
                if (dots == std::string::npos) {
                    out.push_back(std::stol(item, &used));
                    if (used != item.size()) throw UsageError("");
                } else {
                    const long lo = std::stol(item.substr(0, dots)), hi = std::stol(item.substr(dots + 2));
                    if (hi < lo) throw UsageError("");
                    for (long v = lo; v <= hi; ++v) out.push_back(v);
                }
            } catch (const std::exception&) {
                throw UsageError("bad grid values for " + name + ": '" + item + "'");
            }
        }
        if (out.empty()) throw UsageError("empty grid axis " + name);
        return out;
    };
    while (std::getline(all, part, ';')) {
        if (part.empty()) continue;
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw UsageError("grid axis needs '=': '" + part + "'");
        const std::string key = part.substr(0, eq);
        const auto v = values(key, part.substr(eq + 1));
        if (key == "m")
            g.m.assign(v.begin(), v.end());
        else if (key == "N")
            g.N.assign(v.begin(), v.end());
        else if (key == "char")
            for (long c : v) {
                if (c < 0) throw UsageError("negative characteristic in grid");
                g.characteristic.push_back(static_cast<unsigned>(c));
            }
        else
            throw UsageError("unknown grid axis '" + key + "'");
    }
    if (g.m.empty() || g.N.empty() || g.characteristic.empty()) throw UsageError("grid needs m, N and char");
    return g;
}

json report(const GridAxis& grid, int max_degree, const std::vector<std::string>& suites, const std::string& out_dir) {
    static const std::vector<std::string> known{"dims", "centre", "basis", "relations", "generation", "quotient", "resolution"};
    for (const auto& s : suites)
        if (std::find(known.begin(), known.end(), s) == known.end()) throw UsageError("unknown suite '" + s + "'");
    for (int m : grid.m)
        for (int N : grid.N)
            for (unsigned c : grid.characteristic) validate({m, N, c});
    std::filesystem::create_directories(out_dir);

    json summary{{"suite", "report"}, {"results", json::array()}, {"failures", json::array()}};
    std::ofstream csv(out_dir + "/summary.csv");
    csv << "m,N,char,suite,pass,failures\n";
    for (int m : grid.m)
        for (int N : grid.N)
            for (unsigned c : grid.characteristic) {
                const Params p{m, N, c};
                const int D = max_degree < 0 ? 2 * m + 3 : max_degree;
                json point{{"params", params_json(p)}, {"max_degree", D}, {"suites", json::object()}};
                for (const auto& s : suites) {
                    json doc;
                    try {
                        if (s == "dims") doc = dims(p, D, true, std::nullopt);
                        if (s == "centre") doc = centre(p);
                        if (s == "basis") {
                            doc = document(p, "basis");
                            for (int n = 0; n <= std::min(D, 2 * m + 2); ++n) {
                                json one = basis(p, n);
                                for (auto& r : one["results"]) doc["results"].push_back(r);
                                for (auto& f : one["failures"]) doc["failures"].push_back(f);
                            }
                        }
                        if (s == "relations" || s == "generation" || s == "quotient" || s == "resolution")
                            doc = verify(p, s, -1);
                    } catch (const NoClosedForm& e) {
                        doc = document(p, s);
                        doc["skipped"] = e.what();
                    } catch (const std::exception& e) {
                        doc = error_document(p, s, e);
                    }
                    const bool ok = passed(doc);
                    summary["results"].push_back(
                        {{"m", m}, {"N", N}, {"char", c}, {"suite", s}, {"pass", ok}, {"failures", doc["failures"].size()}});
                    for (const auto& f : doc["failures"])
                        summary["failures"].push_back("m=" + std::to_string(m) + " N=" + std::to_string(N) +
                                                      " char=" + std::to_string(c) + " " + s + ": " + f.get<std::string>());
                    csv << m << ',' << N << ',' << c << ',' << s << ',' << (ok ? "true" : "false") << ','
                        << doc["failures"].size() << '\n';
                    point["suites"][s] = doc;
                }
                std::ofstream(out_dir + "/m" + std::to_string(m) + "_N" + std::to_string(N) + "_char" + std::to_string(c) +
                              ".json")
                    << point.dump(2) << '\n';
            }
    std::ofstream(out_dir + "/summary.json") << summary.dump(2) << '\n';
    return summary;
}

bool passed(const json& doc) { return doc.contains("failures") && doc["failures"].empty(); }

bool is_input_error(const std::exception& e) {
    return dynamic_cast<const UsageError*>(&e) || dynamic_cast<const InvalidParams*>(&e) ||
           dynamic_cast<const CompositeCharacteristic*>(&e) || dynamic_cast<const BadCocycleName*>(&e) ||
           dynamic_cast<const InadmissibleId*>(&e) || dynamic_cast<const BadRelation*>(&e);
}

json error_document(const Params& p, const std::string& suite, const std::exception& e) {
    std::string type = "error";
    if (dynamic_cast<const UsageError*>(&e)) type = "usage";
    else if (dynamic_cast<const InvalidParams*>(&e)) type = "invalid_params";
    else if (dynamic_cast<const CompositeCharacteristic*>(&e)) type = "composite_characteristic";
    else if (dynamic_cast<const BadCocycleName*>(&e)) type = "bad_cocycle_name";
    else if (dynamic_cast<const InadmissibleId*>(&e)) type = "inadmissible_id";
    else if (dynamic_cast<const BadRelation*>(&e)) type = "bad_relation";
    else if (dynamic_cast<const NoClosedForm*>(&e)) type = "no_closed_form";
    else if (dynamic_cast<const TooLarge*>(&e)) type = "too_large";
    else if (dynamic_cast<const NotACocycle*>(&e)) type = "not_a_cocycle";
    json doc = document(p, suite);
    doc["error"] = {{"type", type}, {"message", e.what()}};
    doc["failures"].push_back(std::string(type) + ": " + e.what());
    return doc;
}

std::string to_csv(const json& doc) {
    std::ostringstream out;
    const json& rows = doc["results"];
    bool item = false;
    for (const auto& r : rows) item = item || r.contains("item");
    out << "n,computed,formula,match" << (item ? ",item" : "") << '\n';
    for (const auto& r : rows) {
        out << csv_cell(r.value("n", json())) << ',' << csv_cell(r.value("computed", json())) << ','
            << csv_cell(r.value("formula", json())) << ',' << csv_cell(r.value("match", json()));
        if (item) out << ',' << csv_cell(r.value("item", json()));
        out << '\n';
    }
    return out.str();
}

std::string to_text(const json& doc) {
    std::ostringstream out;
    if (doc.contains("params"))
        out << "m=" << doc["params"]["m"] << " N=" << doc["params"]["N"] << " char=" << doc["params"]["char"] << "  ";
    out << "suite: " << doc.value("suite", std::string("?")) << '\n';
    for (const auto& r : doc["results"]) {
        out << "  n=" << cell_text(r.value("n", json())) << "  computed=" << cell_text(r.value("computed", json()))
            << "  formula=" << cell_text(r.value("formula", json())) << "  match=" << cell_text(r.value("match", json()));
        if (r.contains("item")) out << "  " << r["item"].get<std::string>();
        out << '\n';
    }
    if (doc.contains("decomposition") && !doc["decomposition"].is_null()) {
        out << "  =";
        for (const auto& t : doc["decomposition"]) out << ' ' << t["coefficient"].get<std::string>() << '*' << t["id"].get<std::string>();
        if (doc["decomposition"].empty()) out << " 0";
        out << '\n';
    }
    if (doc.contains("error")) out << "  error (" << doc["error"]["type"].get<std::string>() << "): " << doc["error"]["message"].get<std::string>() << '\n';
    out << (passed(doc) ? "PASS" : "FAIL") << " (" << doc["failures"].size() << " failures)\n";
    for (const auto& f : doc["failures"]) out << "  - " << f.get<std::string>() << '\n';
    return out.str();
}

}  // namespace hhcli
