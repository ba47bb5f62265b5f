#pragma once

// Command-line front end: verify, hermite, factorize, quartic-states, evolve,
// zitter, landau. Each command validates its parameters, runs, and produces a
// deterministic report with a pass flag per numerical check.

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfact::cli {

/// Parameter or usage problem; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ReportFormat { json, csv };

ReportFormat format_from_string(const std::string& s);

struct RunConfig {
    std::string command;
    nlohmann::json params = nlohmann::json::object();  // keys as flag names, e.g. "fock-dim"
    ReportFormat format = ReportFormat::json;
    std::string report_path;  // empty: stdout
};

struct RunOutcome {
    int exit_code = 0;  // 0 all checks pass, 1 a check failed
    nlohmann::json report;
    std::vector<std::string> failures;  // names of failing checks
};

const std::vector<std::string>& commands();

/// Fills defaults and type-checks `params` against the command's schema.
/// Throws UsageError on unknown commands, unknown keys, or bad values.
nlohmann::json validate_params(const std::string& command, const nlohmann::json& params);

/// Runs one command. Data artifacts (CSV) named in the parameters are written
/// atomically; the report is returned, not written.
RunOutcome run(const RunConfig& config);

/// Deterministic serialization: sorted keys, doubles as %.17g.
std::string emit_report(const nlohmann::json& report, ReportFormat format);

/// Writes `content` to `path` through a temporary file and rename.
void write_atomic(const std::string& path, const std::string& content);

/// Full CLI: parses argv, runs, writes the report. Returns the process exit status.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dfact::cli
