#pragma once

// Claim registry and runner. Every closed-form number or dichotomy the
// library is supposed to reproduce is registered as one Claim: a
// deterministic compute closure plus the expected value, both serialized
// as exact decimal strings. The runner evaluates claims in id order and
// renders the results as canonical JSON, CSV or an aligned text table.
//
// Determinism contract: two runs with the same config produce identical
// canonical output. Measured runtimes are therefore zeroed unless the
// caller asks for them.

#include <functional>
#include <string>
#include <vector>

namespace nikulin::claims {

inline constexpr const char* kReportVersion = "1.0.0";

struct RunConfig {
    int max_genus = 6;    // F2 enumeration depth (1..12)
    long long max_h = 100; // lattice / numerology sweep bound (2..100000)
    std::string filter_prefix;
    bool fail_fast = false;
};

struct Claim {
    std::string id;          // dot-namespaced, unique, sorted in reports
    std::string description;
    std::string paper_location; // named result being checked
    std::string expected;
    std::function<std::string(const RunConfig&)> compute;
    // Claims for a fixed instance are skipped when the config cannot
    // reach them; sweep claims adapt their range to the config instead.
    int min_genus = 0;
    long long min_h = 0;
};

struct ClaimResult {
    std::string id;
    std::string description;
    std::string paper_location;
    std::string computed;
    std::string expected;
    std::string status; // PASS | FAIL | SKIPPED
    long long runtime_ms = 0;
};

struct ClaimReport {
    std::string version;
    RunConfig config;
    std::vector<ClaimResult> claims;

    std::size_t n_passed() const;
    std::size_t n_failed() const;
    std::size_t n_skipped() const;
};

// The full catalog, sorted by id, ids unique.
const std::vector<Claim>& builtin_claims();

// Throws std::invalid_argument on out-of-range config (a usage error).
ClaimReport run_claims(const RunConfig& config);
ClaimReport run_claims(const RunConfig& config, const std::vector<Claim>& claims);

enum class Format { json, csv, text };

// Throws std::invalid_argument on an unknown token.
Format parse_format(const std::string& token);

// include_timing substitutes measured runtimes for the canonical zeros.
std::string render_report(const ClaimReport& report, Format format,
                          bool include_timing = false);

// 0 if nothing failed, 1 otherwise.
int report_exit_code(const ClaimReport& report);

} // namespace nikulin::claims
