#pragma once

#include "gcodes/codes.hpp"
#include "gcodes/cwgroup.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcodes {

struct Caps {
    long long group = 10000;          // permutation group closure
    long long matrix_group = kDefaultMatrixGroupCap;
    long long ambient = kDefaultAmbientCap;  // |V|^n for brute-force duals, |theta(V^n)|
    long long code = kDefaultCodeCap;
    long long submodules = kDefaultSubmoduleCap;
};

struct ScenarioCode {
    std::vector<Word> generators;
};

/// A validated scenario file. Every reference is resolved and the standing
/// hypotheses (|G| a unit, forms and quadratic maps well defined, beta0
/// nondegenerate) are checked on load.
struct Scenario {
    std::string name;
    Module module;
    int length;
    std::vector<Perm> group_generators;
    PermGroup group;
    std::vector<BilinearForm> forms;  // the set M
    std::size_t beta0 = 0;            // index into forms
    std::vector<QuadraticMap> quadratic;
    Involution involution;
    std::vector<ScenarioCode> codes;
    std::vector<std::string> checks;
    Caps caps;

    DualSpec dual_spec() const { return {forms}; }
    FormRingRep form_ring() const { return FormRingRep(forms[beta0], quadratic, involution); }
};

/// Throws ParseError (with a JSON pointer to the offending value),
/// AssumptionViolated, InvalidForm, DegenerateForm, InvalidInvolution, CapExceeded.
Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario(const std::string& path);

/// The input format; parse_scenario(scenario_to_json(s)) reproduces s.
nlohmann::json scenario_to_json(const Scenario& s);

/// Fractions in scenario files: "p/q" strings or integers.
QmodZ parse_fraction(const nlohmann::json& value, const std::string& where);

struct CorpusOptions {
    std::vector<int> moduli;
    int max_n = 0;
    long long ambient_cap = kDefaultAmbientCap;
};

/// For every m, n <= max_n, subgroup G of S_n with |G| a unit mod m and
/// Phi in {empty, {x^2/m}, {x^2/2} (m even)}: the standard form x y / m and
/// every code generated by one word, deduplicated. Deterministic order.
std::vector<Scenario> corpus_generate(const CorpusOptions& opts);

}  // namespace gcodes
