#include "gcodes/report.hpp"

#include "gcodes/errors.hpp"

#include <functional>
#include <sstream>

namespace gcodes {

using nlohmann::json;

namespace {

// Matrices, bases and V^n-level word lists are echoed only below these sizes.
constexpr std::size_t kMatrixEchoLimit = 4;
constexpr std::size_t kBasisEchoLimit = 16;
constexpr std::size_t kWordEchoLimit = 64;
constexpr std::size_t kWitnessEchoLimit = 32;

json element_json(const Module& v, ModIndex x) {
    auto c = v.coords(x);
    if (v.rank() == 1) return c.front();
    return c;
}

json word_json(const Module& v, const Word& w) {
    json out = json::array();
    for (auto x : w) out.push_back(element_json(v, x));
    return out;
}

json words_json(const Module& v, const std::vector<Word>& ws) {
    json out = json::array();
    for (const auto& w : ws) out.push_back(word_json(v, w));
    return out;
}

// Full list when small, otherwise the size only.
void put_words(json& obj, const std::string& key, const Module& v, const WordSet& ws) {
    obj[key + "_size"] = ws.size();
    if (ws.size() <= kWordEchoLimit) obj[key] = words_json(v, ws);
}

json hwe_json(const HwePoly& p) {
    json coeffs = json::object();
    for (int w = 0; w <= p.t; ++w) {
        const auto& c = p.coeffs[static_cast<std::size_t>(w)];
        if (c != 0) coeffs[std::to_string(w)] = to_string(c);
    }
    return {{"t", p.t}, {"coeffs", coeffs}, {"text", p.to_string()}};
}

json cyc_json(const Cyclotomic& c) { return c.to_strings(); }

json vector_json(const CycVector& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(cyc_json(c));
    return out;
}

json basis_json(const std::vector<CycVector>& b) {
    json out = json::array();
    for (const auto& v : b) out.push_back(vector_json(v));
    return out;
}

json matrix_json(const CycMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cyc_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

json qmap_json(const QuadraticMap& q) {
    json t = json::array();
    for (const auto& c : q.table()) t.push_back(c.to_string());
    return t;
}

json comparison_json(const SpanComparison& c) {
    return {{"relation", to_string(c.relation)},
            {"dim_first", c.dim_first},
            {"dim_second", c.dim_second},
            {"dim_union", c.dim_union}};
}

CheckOutcome error_outcome(const std::exception& e, bool cap) {
    return {CheckStatus::Error, {{"error", e.what()}}, cap};
}

template <class F>
CheckOutcome guarded(F&& f) {
    try {
        return f();
    } catch (const CapExceeded& e) {
        return error_outcome(e, true);
    } catch (const Error& e) {
        return error_outcome(e, false);
    }
}

CheckStatus aggregate(const std::vector<CheckStatus>& st) {
    auto any = [&](CheckStatus x) { return std::find(st.begin(), st.end(), x) != st.end(); };
    if (any(CheckStatus::Mismatch)) return CheckStatus::Mismatch;
    if (any(CheckStatus::Error)) return CheckStatus::Error;
    if (any(CheckStatus::Finding)) return CheckStatus::Finding;
    if (any(CheckStatus::Ok)) return CheckStatus::Ok;
    return CheckStatus::Skipped;
}

CheckStatus verdict(bool ok) { return ok ? CheckStatus::Ok : CheckStatus::Mismatch; }

using CodeBody = std::function<CheckStatus(const GCode&, json&)>;

// Runs body on the closure of every configured code.
CheckOutcome per_code(const Scenario& s, const CodeBody& body) {
    CheckOutcome out{CheckStatus::Skipped, {{"codes", json::array()}}};
    std::vector<CheckStatus> statuses;
    bool all_caps = true;
    for (std::size_t i = 0; i < s.codes.size(); ++i) {
        json entry{{"code", i}, {"generators", words_json(s.module, s.codes[i].generators)}};
        CheckStatus st;
        try {
            GCode c = code_closure(s.module, s.group, s.codes[i].generators, s.caps.code);
            entry["size"] = c.size();
            st = body(c, entry);
        } catch (const CapExceeded& e) {
            entry["error"] = e.what();
            st = CheckStatus::Error;
        } catch (const Error& e) {
            entry["error"] = e.what();
            st = CheckStatus::Error;
            all_caps = false;
        }
        entry["status"] = to_string(st);
        statuses.push_back(st);
        out.payload["codes"].push_back(std::move(entry));
    }
    out.status = aggregate(statuses);
    out.cap_exceeded = out.status == CheckStatus::Error && all_caps;
    return out;
}

ThetaImage scenario_ambient(const Scenario& s) { return ThetaImage(s.group, s.module, s.caps.ambient); }

GRepresentation scenario_rep(const Scenario& s) { return GRepresentation(s.group, s.form_ring(), s.caps.ambient); }

// ---- individual checks ----

CheckOutcome check_lemma_dual(const Scenario& s) {
    const ThetaImage amb = scenario_ambient(s);
    const DualSpec m = s.dual_spec(), orbit = orbit_dual_spec(s.forms);
    return per_code(s, [&](const GCode& c, json& e) {
        auto r = lemma_dual_check(c, m, s.caps.ambient);
        const WordSet tc = theta_code(c);
        e["theta_c"] = words_json(s.module, tc);
        e["g_dual"] = words_json(s.module, r.g_dual);
        e["theta_dual_mg"] = words_json(s.module, r.theta_dual_mg);
        e["orbit_dual_agrees"] = g_dual(amb, tc, orbit) == r.g_dual;
        return verdict(r.ok);
    });
}

CheckOutcome check_hayden(const Scenario& s) {
    const DualSpec m = s.dual_spec();
    return per_code(s, [&](const GCode& c, json& e) {
        auto r = hayden_check(c, m, s.caps.ambient);
        e["failed_clause"] = r.failed_clause;
        e["theta_dual"] = words_json(s.module, r.theta_dual);
        put_words(e, "theta_c_perp", s.module, r.theta_c_perp);
        put_words(e, "ker_theta", s.module, r.ker_theta);
        put_words(e, "sum", s.module, r.sum);
        return verdict(r.ok);
    });
}

CheckOutcome check_hwe(const Scenario& s, bool theorem_form) {
    const DualSpec m = s.dual_spec();
    return per_code(s, [&](const GCode& c, json& e) {
        auto r = theorem_form ? verify_hwemac(c, m, s.caps.ambient) : verify_gmac(c, m);
        e["lhs"] = hwe_json(r.lhs);
        e["rhs"] = hwe_json(r.rhs);
        e["dual_side"] = words_json(s.module, r.dual_side);
        return verdict(r.ok);
    });
}

CheckOutcome check_fwe(const Scenario& s) {
    const DualSpec m = s.dual_spec();
    return per_code(s, [&](const GCode& c, json& e) {
        auto r = verify_fwemac(c, m);
        e["expected"] = vector_json(r.expected);
        json tr = json::array();
        for (const auto& t : r.transforms) tr.push_back(vector_json(t));
        e["transforms"] = tr;
        if (!r.ok) e["failing_form"] = r.failing_form;
        return verdict(r.ok);
    });
}

CheckOutcome check_parainv(const Scenario& s) {
    return guarded([&] {
        const GRepresentation rho = scenario_rep(s);
        auto r = verify_parainv(rho, s.caps.submodules);
        json p{{"comparison", comparison_json(r.comparison)}, {"isotropic_codes", r.isotropic_codes.size()}};
        if (rho.ambient().size() <= kBasisEchoLimit) {
            json codes = json::array();
            for (const auto& d : r.isotropic_codes) codes.push_back(words_json(s.module, d));
            p["isotropic_code_list"] = codes;
            p["fixed_basis"] = basis_json(r.fixed_basis);
            p["span_basis"] = basis_json(r.span_basis);
        }
        return CheckOutcome{verdict(r.ok), p};
    });
}

json cw_group_json(const GRepresentation& rho, long long cap) {
    json out{{"generators", cw_generator_names(rho)}};
    if (rho.ambient().size() > kMatrixEchoLimit) {
        out["order"] = "not-computed";
        return out;
    }
    const auto gens = cw_generators(rho);
    json mats = json::object();
    std::vector<CycMatrix> ms;
    for (const auto& g : gens) {
        mats[g.name] = matrix_json(g.matrix);
        ms.push_back(g.matrix);
    }
    out["matrices"] = mats;
    try {
        out["order"] = group_closure_matrices(ms, cap).order();
    } catch (const CapExceeded&) {
        out["order"] = "cap-exceeded";
    }
    return out;
}

CheckOutcome check_cwinv(const Scenario& s) {
    return guarded([&] {
        const GRepresentation rho = scenario_rep(s);
        CheckOutcome out = per_code(s, [&](const GCode& c, json& e) {
            try {
                auto r = verify_cwinv(rho, c);
                e["fwe"] = vector_json(r.fwe);
                e["failing_generators"] = r.failing_generators;
                return verdict(r.ok);
            } catch (const NotSelfDualIsotropic& ex) {
                e["reason"] = ex.what();
                return CheckStatus::Skipped;
            }
        });
        out.payload["group"] = cw_group_json(rho, s.caps.matrix_group);
        return out;
    });
}

CheckOutcome check_conjecture(const Scenario& s) {
    return guarded([&] {
        const GRepresentation rho = scenario_rep(s);
        auto r = conjecture_explore(rho, s.caps.submodules);
        json p{{"verdict", to_string(r.verdict)},
               {"comparison", comparison_json(r.comparison)},
               {"self_dual_isotropic_codes", r.self_dual_isotropic_codes.size()}};
        if (rho.ambient().size() <= kBasisEchoLimit) {
            json codes = json::array();
            for (const auto& d : r.self_dual_isotropic_codes) codes.push_back(words_json(s.module, d));
            p["self_dual_isotropic_code_list"] = codes;
            p["fixed_basis"] = basis_json(r.fixed_basis);
        }
        return CheckOutcome{verdict(r.verdict != ConjectureVerdict::InclusionViolated), p};
    });
}

json pairs_json(const Module& v, const std::vector<std::pair<Word, Word>>& ps) {
    json out = json::array();
    for (std::size_t i = 0; i < ps.size() && i < kWitnessEchoLimit; ++i)
        out.push_back({{"v", word_json(v, ps[i].first)}, {"w", word_json(v, ps[i].second)}});
    return out;
}

CheckOutcome check_ru(const Scenario& s) {
    return guarded([&] {
        auto r = ru_lemma_check(scenario_ambient(s));
        json p{{"literal_ok", r.literal_ok},
               {"corrected_ok", r.corrected_ok},
               {"literal_counterexample_count", r.literal_counterexamples.size()},
               {"literal_counterexamples", pairs_json(s.module, r.literal_counterexamples)},
               {"corrected_counterexamples", pairs_json(s.module, r.corrected_counterexamples)}};
        return CheckOutcome{verdict(r.corrected_ok), p};
    });
}

CheckOutcome check_iota(const Scenario& s) {
    const DualSpec m = s.dual_spec();
    const auto idem = find_symmetric_idempotents(s.module.ring(), s.involution);
    return per_code(s, [&](const GCode& c, json& e) {
        json rows = json::array();
        bool applicable = false, holds = true;
        for (const auto& sym : idem.found) {
            auto r = iota_selfdual_check(c, sym.iota, m);
            applicable = r.applicable;
            if (!r.applicable) break;
            holds = holds && r.ok;
            rows.push_back({{"iota", sym.iota.residue},
                            {"ok", r.ok},
                            {"theta_iota_c", words_json(s.module, r.theta_iota_c)},
                            {"g_dual", words_json(s.module, r.g_dual)}});
        }
        e["g_self_dual"] = applicable;
        if (!applicable) return CheckStatus::Skipped;
        e["idempotents"] = rows;
        return holds ? CheckStatus::Ok : CheckStatus::Finding;
    });
}

using CheckFn = std::function<CheckOutcome(const Scenario&)>;

const std::vector<std::pair<std::string, CheckFn>>& dispatch() {
    static const std::vector<std::pair<std::string, CheckFn>> table{
        {"lemma-dual", check_lemma_dual},
        {"hayden", check_hayden},
        {"macwilliams-gmac", [](const Scenario& s) { return check_hwe(s, false); }},
        {"macwilliams-hwe", [](const Scenario& s) { return check_hwe(s, true); }},
        {"macwilliams-fwe", check_fwe},
        {"parabolic-invariants", check_parainv},
        {"clifford-weil-invariance", check_cwinv},
        {"conjecture", check_conjecture},
        {"ru-lemma", check_ru},
        {"iota-self-dual", check_iota},
    };
    return table;
}

json derived_json(const Scenario& s) {
    json d;
    d["group_order"] = s.group.order();
    json orbits = json::array();
    const ThetaImage amb = scenario_ambient(s);
    for (const auto& o : amb.orbits().orbits) {
        json one = json::array();
        for (int p : o) one.push_back(p + 1);
        orbits.push_back(one);
    }
    d["orbits"] = orbits;
    d["t"] = amb.t();
    d["ambient_size"] = amb.size();
    d["orbit_lengths"] = orbit_length_diagonal(s.group);
    try {
        const GRepresentation rho = scenario_rep(s);
        d["conductor"] = rho.conductor();
        json phis = json::array();
        for (const auto& q : rho.rep().phis()) phis.push_back(qmap_json(q));
        d["effective_phi"] = phis;
        json found = json::array();
        for (const auto& x : rho.idempotents().found) {
            json pairs = json::array();
            for (const auto& [mu, nu] : x.all_pairs) pairs.push_back({mu.residue, nu.residue});
            found.push_back({{"iota", x.iota.residue}, {"mu", x.mu.residue}, {"nu", x.nu.residue}, {"all_pairs", pairs}});
        }
        json rejected = json::array();
        for (auto r : rho.idempotents().rejected) rejected.push_back(r.residue);
        d["symmetric_idempotents"] = {{"found", found}, {"rejected", rejected}};
    } catch (const Error& e) {
        d["representation_error"] = e.what();
    }
    return d;
}

json orderings_json() {
    return {
        {"module", "V = (Z/m)^k as coordinate tuples in lexicographic order, first coordinate most significant"},
        {"words", "V^n in lexicographic order of module indices"},
        {"ambient", "theta(V^n) in lexicographic order of its words"},
        {"cyclotomic", "coefficients on 1, z, ..., z^(phi(K)-1) with z = exp(2 pi i / K), K the conductor"},
        {"hwe", "coeffs[w] is the coefficient of x^(t-w) y^w"},
    };
}

}  // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Ok: return "ok";
        case CheckStatus::Mismatch: return "mismatch";
        case CheckStatus::Error: return "error";
        case CheckStatus::Skipped: return "skipped";
        case CheckStatus::Finding: return "finding";
    }
    return "unknown";
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : dispatch()) out.push_back(name);
        return out;
    }();
    return names;
}

CheckOutcome run_check(const Scenario& s, const std::string& name) {
    for (const auto& [n, fn] : dispatch())
        if (n == name) return guarded([&] { return fn(s); });
    throw UnknownCheck("\"" + name + "\"");
}

json build_report(const Scenario& s, const std::vector<std::string>& names) {
    std::vector<std::string> expanded;
    for (const auto& n : names) {
        if (n == "all") {
            expanded.insert(expanded.end(), check_names().begin(), check_names().end());
        } else {
            expanded.push_back(n);
        }
    }
    for (const auto& n : expanded)
        if (std::find(check_names().begin(), check_names().end(), n) == check_names().end())
            throw UnknownCheck("\"" + n + "\"");

    json report;
    report["tool"] = {{"name", "gcodes"}, {"version", kToolVersion}};
    report["scenario"] = scenario_to_json(s);
    report["derived"] = derived_json(s);
    report["orderings"] = orderings_json();
    json checks = json::object();
    bool mismatch = false, error = false, cap = false;
    for (const auto& n : expanded) {
        if (checks.contains(n)) continue;
        CheckOutcome o = run_check(s, n);
        json entry = o.payload;
        entry["status"] = to_string(o.status);
        if (o.cap_exceeded) entry["cap_exceeded"] = true;
        mismatch |= o.status == CheckStatus::Mismatch;
        if (o.status == CheckStatus::Error) (o.cap_exceeded ? cap : error) = true;
        checks[n] = std::move(entry);
    }
    report["checks"] = checks;
    const int code = mismatch || error ? 1 : (cap ? 3 : 0);
    report["summary"] = {{"status", code == 0 ? "ok" : (code == 3 ? "cap-exceeded" : "failed")}, {"exit_code", code}};
    return report;
}

int exit_status(const json& report) { return report.at("summary").at("exit_code").get<int>(); }

std::string emit_json(const json& report) { return report.dump(2) + "\n"; }

std::string emit_text(const json& report) {
    std::ostringstream out;
    const json& d = report.at("derived");
    out << "scenario " << report.at("scenario").at("name").get<std::string>() << ": m="
        << report.at("scenario").at("ring").at("modulus") << " n=" << report.at("scenario").at("length")
        << " |G|=" << d.at("group_order") << " t=" << d.at("t") << " |theta(V^n)|=" << d.at("ambient_size");
    if (d.contains("conductor")) out << " K=" << d.at("conductor");
    out << "\n";
    for (const auto& [name, c] : report.at("checks").items()) {
        out << "  " << name << ": " << c.at("status").get<std::string>();
        if (c.contains("verdict")) out << " (" << c.at("verdict").get<std::string>() << ")";
        if (c.contains("comparison"))
            out << " dims " << c.at("comparison").at("dim_first") << ", " << c.at("comparison").at("dim_second");
        if (c.contains("error")) out << " " << c.at("error").get<std::string>();
        out << "\n";
        if (!c.contains("codes")) continue;
        for (const auto& e : c.at("codes")) {
            out << "    code " << e.at("code") << " " << e.at("generators").dump() << ": " << e.at("status").get<std::string>();
            if (e.contains("lhs"))
                out << "  lhs " << e.at("lhs").at("text").get<std::string>() << ", rhs "
                    << e.at("rhs").at("text").get<std::string>();
            if (e.contains("error")) out << "  " << e.at("error").get<std::string>();
            if (e.contains("reason")) out << "  " << e.at("reason").get<std::string>();
            out << "\n";
        }
    }
    out << "summary: " << report.at("summary").at("status").get<std::string>() << "\n";
    return out.str();
}

}  // namespace gcodes
