// gcodes: verify scenarios, sweep the corpus, list symmetric idempotents.
//
// Exit codes: 0 ok, 1 mismatch or error, 2 usage/parse/assumption, 3 cap exceeded.

#include "gcodes/errors.hpp"
#include "gcodes/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace gcodes;
using nlohmann::json;

namespace {

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("IoError: cannot write " + path);
    f << text;
}

int run_verify(const std::string& path, const std::vector<std::string>& checks, const std::string& emit,
               long long cap_group, long long cap_ambient, const std::string& out) {
    Scenario s = load_scenario(path);
    if (cap_group > 0) s.caps.group = s.caps.matrix_group = cap_group;
    if (cap_ambient > 0) s.caps.ambient = cap_ambient;
    std::vector<std::string> names = checks;
    if (names.empty()) names = s.checks.empty() ? std::vector<std::string>{"all"} : s.checks;
    const json report = build_report(s, names);
    write_out(out, emit == "text" ? emit_text(report) : emit_json(report));
    return exit_status(report);
}

int run_corpus(const std::vector<int>& moduli, int max_n, bool run, const std::string& emit,
               long long cap_ambient, const std::string& out) {
    CorpusOptions opts{moduli, max_n, cap_ambient};
    const auto corpus = corpus_generate(opts);
    if (!run) {
        json docs = json::array();
        for (const auto& s : corpus) docs.push_back(scenario_to_json(s));
        write_out(out, docs.dump(2) + "\n");
        return 0;
    }
    json rows = json::array();
    int worst = 0;
    std::string text;
    for (const auto& s : corpus) {
        const json r = build_report(s, {"all"});
        json statuses = json::object();
        for (const auto& [name, c] : r.at("checks").items()) statuses[name] = c.at("status");
        const int code = exit_status(r);
        if (code == 1 || (code == 3 && worst == 0)) worst = code;
        rows.push_back({{"name", s.name}, {"checks", statuses}, {"exit_code", code}});
        text += s.name + ": " + r.at("summary").at("status").get<std::string>();
        if (r.at("checks").contains("conjecture") && r.at("checks").at("conjecture").contains("verdict"))
            text += " conjecture=" + r.at("checks").at("conjecture").at("verdict").get<std::string>();
        text += "\n";
    }
    json doc{{"scenarios", rows}, {"count", corpus.size()}, {"exit_code", worst}};
    write_out(out, emit == "text" ? text : doc.dump(2) + "\n");
    return worst;
}

int run_idempotents(int modulus, const std::vector<int>& involution) {
    Ring r(modulus);
    Involution j = Involution::identity(r);
    if (!involution.empty()) {
        j.table.clear();
        for (int x : involution) j.table.push_back(r.reduce(x));
        if (static_cast<int>(j.table.size()) != modulus) throw ParseError("--involution needs one image per residue");
        validate_involution(r, j);
    }
    const auto found = find_symmetric_idempotents(r, j);
    json rows = json::array();
    for (const auto& s : found.found) {
        json pairs = json::array();
        for (const auto& [mu, nu] : s.all_pairs) pairs.push_back({mu.residue, nu.residue});
        rows.push_back({{"iota", s.iota.residue}, {"mu", s.mu.residue}, {"nu", s.nu.residue}, {"all_pairs", pairs}});
    }
    json rejected = json::array();
    for (auto x : found.rejected) rejected.push_back(x.residue);
    std::cout << json{{"modulus", modulus}, {"found", rows}, {"rejected", rejected}}.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of G-code MacWilliams identities and Clifford-Weil invariants"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::string scenario, emit = "json", out;
    std::vector<std::string> checks;
    long long cap_group = 0, cap_ambient = 0;
    auto* verify = app.add_subcommand("verify", "Run checks on a scenario file");
    verify->add_option("--scenario", scenario, "Scenario JSON file")->required()->check(CLI::ExistingFile);
    verify->add_option("--check", checks, "Check name or all (repeatable; default: the scenario's list)");
    verify->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--cap-group", cap_group, "Cap on group closures")->check(CLI::PositiveNumber);
    verify->add_option("--cap-ambient", cap_ambient, "Cap on |V|^n and |theta(V^n)|")->check(CLI::PositiveNumber);
    verify->add_option("--output", out, "Write the report here instead of stdout");

    std::vector<int> moduli;
    int max_n = 0;
    bool run = false;
    long long corpus_cap = kDefaultAmbientCap;
    auto* corpus = app.add_subcommand("corpus", "Generate (and optionally verify) the scenario corpus");
    corpus->add_option("--modulus-list", moduli, "Moduli, e.g. 2,3,4")->delimiter(',')->required();
    corpus->add_option("--max-n", max_n, "Largest length")->required()->check(CLI::NonNegativeNumber);
    corpus->add_flag("--run", run, "Run every check and print one status line per scenario");
    corpus->add_option("--emit", emit, "Output format with --run")->check(CLI::IsMember({"json", "text"}));
    corpus->add_option("--cap-ambient", corpus_cap, "Cap on |V|^n")->check(CLI::PositiveNumber);
    corpus->add_option("--output", out, "Write here instead of stdout");

    int modulus = 0;
    std::vector<int> involution;
    auto* idem = app.add_subcommand("idempotents", "List symmetric idempotents of Z/m");
    idem->add_option("--modulus", modulus, "m")->required()->check(CLI::Range(1, 10000));
    idem->add_option("--involution", involution, "Images of 0..m-1 (default identity)")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) return run_verify(scenario, checks, emit, cap_group, cap_ambient, out);
        if (*corpus) return run_corpus(moduli, max_n, run, emit, corpus_cap, out);
        if (*idem) return run_idempotents(modulus, involution);
    } catch (const CapExceeded& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
