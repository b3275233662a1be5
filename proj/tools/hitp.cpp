// Command-line front end: cohit bases, invariants, top slices, digit reports
// and the embedded fixture suite.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hitp/cli/fixtures.hpp"
#include "hitp/cli/render.hpp"
#include "hitp/cohit.hpp"
#include "hitp/glinv.hpp"
#include "hitp/report.hpp"
#include "hitp/steenrod.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Options {
    std::size_t h = 3;
    unsigned p = 3;
    std::optional<std::uint64_t> m;
    std::optional<std::uint64_t> n;
    std::string mode = "edge-sum";
    std::string order = "balanced";
    std::size_t limit = 0;
    std::string format = "text";
    bool assert_triangular = false;
    std::string filter;
};

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_basis(const Options& o)
{
    const hitp::PrimeModulus p(o.p);
    auto b = hitp::cohit_basis(o.h, p, *o.m, hitp::parse_mode(o.mode), hitp::parse_order(o.order));
    auto report = hitp::cli::make_basis_report(b);
    int rc = kExitOk;
    std::optional<std::vector<hitp::LevelTriangularity>> tri;
    if (o.assert_triangular) {
        tri = hitp::triangularity_report(o.h, p, *o.m);
        for (const auto& lt : *tri)
            if (!lt.echelon())
                rc = kExitFailure;
    }
    if (o.format == "json") {
        nlohmann::json j = report;
        if (tri) {
            j["triangular"] = rc == kExitOk;
        }
        emit(j);
    } else {
        std::cout << hitp::cli::render_text(report, o.limit);
        if (tri)
            std::cout << hitp::cli::render_triangularity(*tri);
    }
    return rc;
}

int cmd_invariants(const Options& o)
{
    const hitp::PrimeModulus p(o.p);
    auto blocks =
        hitp::build_quotient_blocks(o.h, p, *o.m, hitp::parse_mode(o.mode), hitp::parse_order(o.order));
    auto inv = hitp::invariants(blocks, hitp::Twist::none);
    auto report = hitp::cli::make_invariant_report(blocks.basis, inv);
    if (o.format == "json")
        emit(report);
    else
        std::cout << hitp::cli::render_text(report);
    return kExitOk;
}

int cmd_slice(const Options& o)
{
    const hitp::PrimeModulus p(o.p);
    const auto sd = hitp::slice_degree(*o.n, o.h);
    auto blocks =
        hitp::build_quotient_blocks(o.h, p, sd.m, hitp::parse_mode(o.mode), hitp::parse_order(o.order));
    auto inv = hitp::invariants(blocks, hitp::Twist::det_inverse);
    auto report = hitp::cli::make_slice_report(sd.n, blocks.basis, inv);
    if (o.format == "json")
        emit(report);
    else
        std::cout << hitp::cli::render_text(report, o.limit);
    return kExitOk;
}

int cmd_digit_report(const Options& o)
{
    auto report = hitp::cli::make_digit_report(o.h, hitp::PrimeModulus(o.p), *o.m);
    if (o.format == "json")
        emit(report);
    else
        std::cout << hitp::cli::render_text(report);
    return kExitOk;
}

int cmd_verify(const Options& o)
{
    auto report = hitp::cli::run_fixtures(o.filter);
    if (o.format == "json")
        emit(report);
    else
        std::cout << hitp::cli::render_text(report);
    if (report.results.empty()) {
        std::cerr << "no fixture matches '" << o.filter << "'\n";
        return kExitUsage;
    }
    return report.ok() ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohit bases and GL-invariants for the Steenrod hit problem at odd primes"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> modes{"graded", "edge-sum", "full"};
    const std::vector<std::string> orders{"lex", "antilex", "balanced", "cartan-lex"};
    const std::vector<std::string> formats{"text", "json"};

    auto add_common = [&](CLI::App* sub, bool with_mode) {
        sub->add_option("--h", o.h, "number of variables")->check(CLI::PositiveNumber);
        sub->add_option("--p", o.p, "odd prime");
        if (with_mode) {
            sub->add_option("--mode", o.mode, "hit matrix construction")->check(CLI::IsMember(modes));
            sub->add_option("--order", o.order, "candidate order for the greedy basis")->check(CLI::IsMember(orders));
        }
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    };

    auto* basis = app.add_subcommand("basis", "admissible monomial basis of the cohit quotient");
    add_common(basis, true);
    basis->add_option("--m", o.m, "polynomial degree")->required();
    basis->add_option("--limit", o.limit, "show at most this many representatives (0 = all)");
    basis->add_flag("--assert-triangular", o.assert_triangular,
                    "check that graded level blocks are echelon under cartan-lex rows");

    auto* inv = app.add_subcommand("invariants", "GL-invariants of the cohit quotient");
    add_common(inv, true);
    inv->add_option("--m", o.m, "polynomial degree")->required();

    auto* slice = app.add_subcommand("slice", "top-exterior slice and its determinant-twisted invariants");
    add_common(slice, true);
    slice->add_option("--n", o.n, "total degree, n = 2m + h")->required();
    slice->add_option("--limit", o.limit, "show at most this many basis elements (0 = all)");

    auto* digits = app.add_subcommand("digit-report", "pivot and kept digit signatures per level");
    add_common(digits, false);
    digits->add_option("--m", o.m, "polynomial degree")->required();

    auto* verify = app.add_subcommand("verify", "run the embedded fixture suite");
    verify->add_option("--filter", o.filter, "glob on fixture ids, e.g. 'slice-*'");
    verify->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (basis->parsed())
            return cmd_basis(o);
        if (inv->parsed())
            return cmd_invariants(o);
        if (slice->parsed())
            return cmd_slice(o);
        if (digits->parsed())
            return cmd_digit_report(o);
        if (verify->parsed())
            return cmd_verify(o);
    } catch (const hitp::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
