#include "nikulin/claims.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace nikulin::claims {

namespace {

std::size_t count_status(const ClaimReport& report, const char* status)
{
    return static_cast<std::size_t>(
        std::count_if(report.claims.begin(), report.claims.end(),
                      [&](const ClaimResult& c) { return c.status == status; }));
}

void validate_config(const RunConfig& config)
{
    if (config.max_genus < 1 || config.max_genus > 12)
        throw std::invalid_argument("max-genus must be between 1 and 12");
    if (config.max_h < 2 || config.max_h > 100000)
        throw std::invalid_argument("max-h must be between 2 and 100000");
}

std::string csv_escape(const std::string& field)
{
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string truncate(const std::string& s, std::size_t width)
{
    if (s.size() <= width)
        return s;
    return s.substr(0, width - 3) + "...";
}

} // namespace

std::size_t ClaimReport::n_passed() const
{
    return count_status(*this, "PASS");
}

std::size_t ClaimReport::n_failed() const
{
    return count_status(*this, "FAIL");
}

std::size_t ClaimReport::n_skipped() const
{
    return count_status(*this, "SKIPPED");
}

ClaimReport run_claims(const RunConfig& config)
{
    return run_claims(config, builtin_claims());
}

ClaimReport run_claims(const RunConfig& config, const std::vector<Claim>& claims)
{
    validate_config(config);

    std::vector<const Claim*> selected;
    for (const Claim& claim : claims)
        if (claim.id.rfind(config.filter_prefix, 0) == 0)
            selected.push_back(&claim);
    std::sort(selected.begin(), selected.end(),
              [](const Claim* a, const Claim* b) { return a->id < b->id; });

    ClaimReport report;
    report.version = kReportVersion;
    report.config = config;

    bool halted = false;
    for (const Claim* claim : selected) {
        ClaimResult result;
        result.id = claim->id;
        result.description = claim->description;
        result.paper_location = claim->paper_location;
        result.expected = claim->expected;

        bool reachable =
            claim->min_genus <= config.max_genus && claim->min_h <= config.max_h;
        if (halted || !reachable) {
            result.status = "SKIPPED";
        } else {
            auto start = std::chrono::steady_clock::now();
            try {
                result.computed = claim->compute(config);
            } catch (const std::exception& e) {
                result.computed = std::string("error: ") + e.what();
            }
            auto stop = std::chrono::steady_clock::now();
            result.runtime_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
                    .count();
            result.status = (result.computed == result.expected) ? "PASS" : "FAIL";
            if (result.status == "FAIL" && config.fail_fast)
                halted = true;
        }
        report.claims.push_back(std::move(result));
    }
    return report;
}

Format parse_format(const std::string& token)
{
    if (token == "json")
        return Format::json;
    if (token == "csv")
        return Format::csv;
    if (token == "text")
        return Format::text;
    throw std::invalid_argument("unknown format '" + token + "' (use json, csv or text)");
}

std::string render_report(const ClaimReport& report, Format format, bool include_timing)
{
    if (format == Format::json) {
        nlohmann::ordered_json j;
        j["version"] = report.version;
        j["config"] = {
            {"max_genus", std::to_string(report.config.max_genus)},
            {"max_h", std::to_string(report.config.max_h)},
            {"filter_prefix", report.config.filter_prefix},
            {"fail_fast", report.config.fail_fast ? "true" : "false"},
        };
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const ClaimResult& c : report.claims) {
            arr.push_back({
                {"id", c.id},
                {"description", c.description},
                {"paper_location", c.paper_location},
                {"computed", c.computed},
                {"expected", c.expected},
                {"status", c.status},
                {"runtime_ms", include_timing ? std::to_string(c.runtime_ms) : "0"},
            });
        }
        j["claims"] = std::move(arr);
        return j.dump(2) + "\n";
    }

    if (format == Format::csv) {
        std::ostringstream out;
        out << "id,description,paper_location,computed,expected,status\n";
        for (const ClaimResult& c : report.claims)
            out << csv_escape(c.id) << ',' << csv_escape(c.description) << ','
                << csv_escape(c.paper_location) << ',' << csv_escape(c.computed) << ','
                << csv_escape(c.expected) << ',' << c.status << '\n';
        return out.str();
    }

    // text
    std::size_t id_width = 2;
    for (const ClaimResult& c : report.claims)
        id_width = std::max(id_width, c.id.size());
    std::ostringstream out;
    for (const ClaimResult& c : report.claims) {
        out << c.id << std::string(id_width - c.id.size() + 2, ' ');
        out << c.status << std::string(8 - c.status.size(), ' ');
        if (c.status == "FAIL")
            out << "computed " << c.computed << "  expected " << c.expected;
        else if (c.status == "SKIPPED")
            out << "-";
        else
            out << truncate(c.computed, 56);
        if (include_timing && c.status != "SKIPPED")
            out << "  [" << c.runtime_ms << " ms]";
        out << '\n';
    }
    if (report.n_skipped() > 0)
        out << report.n_skipped() << " skipped\n";
    out << report.n_passed() << " passed, " << report.n_failed() << " failed\n";
    return out.str();
}

int report_exit_code(const ClaimReport& report)
{
    return report.n_failed() == 0 ? 0 : 1;
}

} // namespace nikulin::claims
