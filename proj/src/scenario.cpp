#include "gcodes/scenario.hpp"

#include "gcodes/errors.hpp"

#include <fstream>
#include <numeric>
#include <set>

namespace gcodes {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
    return obj.at(key);
}

long long as_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
    return v.get<long long>();
}

const json& as_array(const json& v, const std::string& where) {
    if (!v.is_array()) throw ParseError(where + ": expected an array");
    return v;
}

std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

ModIndex parse_element(const Module& v, const json& x, const std::string& where) {
    std::vector<int> coords;
    if (x.is_array()) {
        for (std::size_t i = 0; i < x.size(); ++i) coords.push_back(static_cast<int>(as_int(x[i], at(where, i))));
    } else {
        coords.push_back(static_cast<int>(as_int(x, where)));
    }
    if (static_cast<int>(coords.size()) != v.rank())
        throw ParseError(where + ": expected " + std::to_string(v.rank()) + " coordinates");
    for (auto& c : coords) c = v.ring().reduce(c).residue;
    return v.index(coords);
}

Word parse_word(const Module& v, int n, const json& w, const std::string& where) {
    as_array(w, where);
    if (static_cast<int>(w.size()) != n)
        throw ParseError(where + ": word of length " + std::to_string(w.size()) + ", expected " + std::to_string(n));
    Word out;
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(parse_element(v, w[i], at(where, i)));
    return out;
}

json element_json(const Module& v, ModIndex x) {
    auto c = v.coords(x);
    if (v.rank() == 1) return c.front();
    return c;
}

BilinearForm parse_form(const Module& v, const json& f, const std::string& where) {
    if (f.contains("diagonal")) return BilinearForm::diagonal(v, parse_fraction(f.at("diagonal"), where + "/diagonal"));
    const json& g = as_array(require(f, "gram", where), where + "/gram");
    Gram gram;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::string wi = at(where + "/gram", i);
        gram.emplace_back();
        for (std::size_t j = 0; j < as_array(g[i], wi).size(); ++j) gram.back().push_back(parse_fraction(g[i][j], at(wi, j)));
    }
    if (static_cast<int>(gram.size()) != v.rank()) throw ParseError(where + "/gram: expected a k x k matrix");
    return BilinearForm(v, std::move(gram));
}

QuadraticMap parse_quadratic(const Module& v, const json& q, const std::string& where) {
    if (q.contains("square")) return QuadraticMap::square(v, parse_fraction(q.at("square"), where + "/square"));
    const json& t = as_array(require(q, "table", where), where + "/table");
    if (static_cast<int>(t.size()) != v.size())
        throw ParseError(where + "/table: expected " + std::to_string(v.size()) + " values");
    std::vector<QmodZ> table;
    for (std::size_t i = 0; i < t.size(); ++i) table.push_back(parse_fraction(t[i], at(where + "/table", i)));
    QuadraticMap phi(v, std::move(table));
    if (auto bad = quadratic_check(phi))
        throw InvalidForm(where + ": quadratic law fails at (" + v.to_string(bad->u) + ", " + v.to_string(bad->v) +
                          ", " + v.to_string(bad->w) + ")");
    return phi;
}

Scenario parse_impl(const json& doc) {
    if (!doc.is_object()) throw ParseError("/: expected an object");
    const json& ring = require(doc, "ring", "");
    const long long m = as_int(require(ring, "modulus", "/ring"), "/ring/modulus");
    const long long k = ring.contains("module_rank") ? as_int(ring.at("module_rank"), "/ring/module_rank") : 1;
    if (m < 2) throw ParseError("/ring/modulus: must be at least 2");
    if (k < 1) throw ParseError("/ring/module_rank: must be at least 1");
    Module v({static_cast<int>(m), static_cast<int>(k)});

    Involution j = Involution::identity(v.ring());
    if (ring.contains("involution")) {
        const json& t = as_array(ring.at("involution"), "/ring/involution");
        if (static_cast<long long>(t.size()) != m) throw ParseError("/ring/involution: expected one image per residue");
        j.table.clear();
        for (std::size_t i = 0; i < t.size(); ++i) j.table.push_back(v.ring().reduce(as_int(t[i], at("/ring/involution", i))));
        validate_involution(v.ring(), j);
    }

    Caps caps;
    if (doc.contains("caps")) {
        const json& c = doc.at("caps");
        auto read = [&](const char* key, long long& slot) {
            if (c.contains(key)) slot = as_int(c.at(key), std::string("/caps/") + key);
        };
        read("group", caps.group);
        read("matrix_group", caps.matrix_group);
        read("ambient", caps.ambient);
        read("code", caps.code);
        read("submodules", caps.submodules);
    }

    const long long n = as_int(require(doc, "length", ""), "/length");
    if (n < 1) throw ParseError("/length: must be positive");
    std::vector<Perm> gens;
    if (doc.contains("group")) {
        const json& g = as_array(require(doc.at("group"), "generators", "/group"), "/group/generators");
        for (std::size_t i = 0; i < g.size(); ++i) {
            const std::string wi = at("/group/generators", i);
            std::vector<int> images;
            for (std::size_t p = 0; p < as_array(g[i], wi).size(); ++p) images.push_back(static_cast<int>(as_int(g[i][p], at(wi, p))));
            if (static_cast<long long>(images.size()) != n) throw ParseError(wi + ": expected " + std::to_string(n) + " images");
            gens.push_back(Perm::from_images(images));
        }
    }
    PermGroup group = group_closure(static_cast<int>(n), gens, caps.group);
    if (std::gcd(static_cast<long long>(group.order()), m) != 1)
        throw AssumptionViolated("|G| = " + std::to_string(group.order()) + " is not a unit in Z/" + std::to_string(m) +
                                 "; hypothesis: |G| is a unit in R");

    std::vector<BilinearForm> forms;
    const json& fs = as_array(require(doc, "forms", ""), "/forms");
    if (fs.empty()) throw ParseError("/forms: at least one form is required");
    for (std::size_t i = 0; i < fs.size(); ++i) forms.push_back(parse_form(v, fs[i], at("/forms", i)));
    const long long b0 = doc.contains("beta0") ? as_int(doc.at("beta0"), "/beta0") : 0;
    if (b0 < 0 || b0 >= static_cast<long long>(forms.size())) throw ParseError("/beta0: no such form");

    std::vector<QuadraticMap> quadratic;
    if (doc.contains("quadratic")) {
        const json& qs = as_array(doc.at("quadratic"), "/quadratic");
        for (std::size_t i = 0; i < qs.size(); ++i) quadratic.push_back(parse_quadratic(v, qs[i], at("/quadratic", i)));
    }

    std::vector<ScenarioCode> codes;
    if (doc.contains("codes")) {
        const json& cs = as_array(doc.at("codes"), "/codes");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const std::string wi = at("/codes", i) + "/generators";
            const json& g = as_array(require(cs[i], "generators", at("/codes", i)), wi);
            ScenarioCode c;
            for (std::size_t w = 0; w < g.size(); ++w) c.generators.push_back(parse_word(v, static_cast<int>(n), g[w], at(wi, w)));
            codes.push_back(std::move(c));
        }
    }

    std::vector<std::string> checks;
    if (doc.contains("checks")) {
        const json& cs = as_array(doc.at("checks"), "/checks");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (!cs[i].is_string()) throw ParseError(at("/checks", i) + ": expected a string");
            checks.push_back(cs[i].get<std::string>());
        }
    }

    Scenario s{doc.value("name", std::string("unnamed")),
               v,
               static_cast<int>(n),
               gens,
               group,
               forms,
               static_cast<std::size_t>(b0),
               quadratic,
               j,
               codes,
               checks,
               caps};
    s.form_ring();  // nondegeneracy of beta0, involution
    return s;
}

}  // namespace

QmodZ parse_fraction(const json& value, const std::string& where) {
    if (value.is_number_integer()) return QmodZ(Rational(static_cast<long>(value.get<long long>())));
    if (!value.is_string()) throw ParseError(where + ": expected a fraction string");
    try {
        return QmodZ::parse(value.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

Scenario parse_scenario(const json& doc) {
    try {
        return parse_impl(doc);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return parse_scenario(doc);
}

json scenario_to_json(const Scenario& s) {
    const Module& v = s.module;
    json doc;
    doc["name"] = s.name;
    doc["ring"] = {{"modulus", v.ring().modulus()}, {"module_rank", v.rank()}};
    json inv = json::array();
    for (auto r : s.involution.table) inv.push_back(r.residue);
    doc["ring"]["involution"] = inv;
    doc["length"] = s.length;
    json gens = json::array();
    for (const auto& g : s.group_generators) gens.push_back(g.one_based());
    doc["group"] = {{"generators", gens}};
    json forms = json::array();
    for (const auto& f : s.forms) {
        json gram = json::array();
        for (const auto& row : f.gram()) {
            json r = json::array();
            for (const auto& c : row) r.push_back(c.to_string());
            gram.push_back(r);
        }
        forms.push_back({{"gram", gram}});
    }
    doc["forms"] = forms;
    doc["beta0"] = s.beta0;
    json qs = json::array();
    for (const auto& q : s.quadratic) {
        json t = json::array();
        for (const auto& c : q.table()) t.push_back(c.to_string());
        qs.push_back({{"table", t}});
    }
    doc["quadratic"] = qs;
    json codes = json::array();
    for (const auto& c : s.codes) {
        json g = json::array();
        for (const auto& w : c.generators) {
            json word = json::array();
            for (auto x : w) word.push_back(element_json(v, x));
            g.push_back(word);
        }
        codes.push_back({{"generators", g}});
    }
    doc["codes"] = codes;
    doc["checks"] = s.checks;
    doc["caps"] = {{"group", s.caps.group},
                   {"matrix_group", s.caps.matrix_group},
                   {"ambient", s.caps.ambient},
                   {"code", s.caps.code},
                   {"submodules", s.caps.submodules}};
    return doc;
}

std::vector<Scenario> corpus_generate(const CorpusOptions& opts) {
    std::vector<Scenario> out;
    for (int m : opts.moduli) {
        Module v({m, 1});
        const auto beta = BilinearForm::diagonal(v, QmodZ(1, m));
        std::vector<std::pair<std::string, std::vector<QuadraticMap>>> phi_options{{"phi=none", {}}};
        phi_options.push_back({"phi=x^2/" + std::to_string(m), {QuadraticMap::square(v, QmodZ(1, m))}});
        if (m % 2 == 0) phi_options.push_back({"phi=x^2/2", {QuadraticMap::square(v, QmodZ(1, 2))}});

        for (int n = 1; n <= opts.max_n; ++n) {
            const auto words = all_words(v, n, opts.ambient_cap);
            const auto groups = all_subgroups(n);
            for (std::size_t gi = 0; gi < groups.size(); ++gi) {
                const PermGroup& g = groups[gi];
                if (std::gcd(static_cast<long long>(g.order()), static_cast<long long>(m)) != 1) continue;
                // one generator per distinct cyclic code, smallest generator first
                std::vector<ScenarioCode> codes;
                std::set<WordSet> seen;
                for (const auto& w : words)
                    if (seen.insert(code_closure(v, g, {w}).words()).second) codes.push_back({{w}});
                for (const auto& [tag, phis] : phi_options) {
                    Scenario s{"m=" + std::to_string(m) + " n=" + std::to_string(n) + " G#" + std::to_string(gi) +
                                   " |G|=" + std::to_string(g.order()) + " " + tag,
                               v,
                               n,
                               g.generators(),
                               g,
                               {beta},
                               0,
                               phis,
                               Involution::identity(v.ring()),
                               codes,
                               {"all"},
                               {}};
                    s.caps.ambient = opts.ambient_cap;
                    out.push_back(std::move(s));
                }
            }
        }
    }
    return out;
}

}  // namespace gcodes
