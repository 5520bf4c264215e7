// nikulin-check: evaluates the claim catalog (theta-characteristic counts,
// Nikulin/E8(-2) lattice arithmetic, Brill-Noether numerology) and emits a
// deterministic report. Exit codes: 0 all pass, 1 any fail, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nikulin/claims.hpp"

namespace {

int run_command(const nikulin::claims::RunConfig& config, const std::string& format,
                const std::string& out_path, bool timing, const std::string& inject)
{
    namespace claims = nikulin::claims;

    claims::Format fmt = claims::parse_format(format);
    std::vector<claims::Claim> catalog = claims::builtin_claims();
    if (!inject.empty()) {
        bool found = false;
        for (claims::Claim& c : catalog)
            if (c.id == inject) {
                c.expected = "[injected-wrong-value]";
                found = true;
            }
        if (!found)
            throw std::invalid_argument("--inject-failure: unknown claim id '" + inject +
                                        "'");
    }

    claims::ClaimReport report = claims::run_claims(config, catalog);
    std::string rendered = claims::render_report(report, fmt, timing);
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file)
            throw std::invalid_argument("cannot open '" + out_path + "' for writing");
        file << rendered;
    } else {
        std::cout << rendered;
    }
    return claims::report_exit_code(report);
}

int list_command()
{
    std::size_t width = 0;
    for (const auto& claim : nikulin::claims::builtin_claims())
        width = std::max(width, claim.id.size());
    for (const auto& claim : nikulin::claims::builtin_claims())
        std::cout << claim.id << std::string(width - claim.id.size() + 2, ' ') << '['
                  << claim.paper_location << "] " << claim.description << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exhaustive checker for theta-characteristic, Nikulin-lattice and "
                 "Brill-Noether numerology"};
    app.require_subcommand(1);

    int max_genus = 6;
    long long max_h = 100;
    std::string filter, format = "json", out_path, inject;
    bool fail_fast = false, timing = false;

    CLI::App* run = app.add_subcommand("run", "evaluate claims and emit a report");
    run->add_option("--max-genus", max_genus, "F2 enumeration depth (1..12)")
        ->capture_default_str();
    run->add_option("--max-h", max_h, "lattice/numerology sweep bound (2..100000)")
        ->capture_default_str();
    run->add_option("--filter", filter, "only claims whose id starts with this prefix");
    run->add_option("--format", format, "json, csv or text")->capture_default_str();
    run->add_option("--out", out_path, "write the report to a file instead of stdout");
    run->add_flag("--fail-fast", fail_fast, "stop at the first failing claim");
    run->add_flag("--timing", timing,
                  "include measured runtimes (output is no longer canonical)");
    run->add_option("--inject-failure", inject,
                    "replace the expected value of one claim (testing hook)")
        ->group(""); // hidden from --help

    CLI::App* list = app.add_subcommand("list", "print the claim catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (list->parsed())
            return list_command();
        nikulin::claims::RunConfig config{max_genus, max_h, filter, fail_fast};
        return run_command(config, format, out_path, timing, inject);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
