#pragma once

#include "gcodes/scenario.hpp"

#include <string>
#include <vector>

namespace gcodes {

inline constexpr const char* kToolVersion = "0.1.0";

/// ok, mismatch and error are verdicts; skipped means the check had nothing to
/// run on; finding marks a report-only outcome that does not fail the run.
enum class CheckStatus { Ok, Mismatch, Error, Skipped, Finding };
std::string to_string(CheckStatus s);

struct CheckOutcome {
    CheckStatus status;
    nlohmann::json payload;
    bool cap_exceeded = false;
};

/// Stable check names, in the order "all" runs them.
const std::vector<std::string>& check_names();

/// Throws UnknownCheck. Library errors raised while checking are caught and
/// reported as status error.
CheckOutcome run_check(const Scenario& s, const std::string& name);

/// Runs the named checks ("all" expands to check_names()) and assembles the
/// full report: tool, scenario echo, derived data, orderings, checks, summary.
nlohmann::json build_report(const Scenario& s, const std::vector<std::string>& names);

/// 0 when no check is mismatch or error, 3 when the only errors are caps, else 1.
int exit_status(const nlohmann::json& report);

/// Canonical JSON: sorted keys, two-space indent, trailing newline.
std::string emit_json(const nlohmann::json& report);
/// One line per check and code.
std::string emit_text(const nlohmann::json& report);

}  // namespace gcodes
