#pragma once

#include <fnmatch.h>

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hitp/cli/fixture_data.hpp"
#include "hitp/cli/render.hpp"
#include "hitp/cohit.hpp"
#include "hitp/glinv.hpp"
#include "hitp/report.hpp"
#include "hitp/steenrod.hpp"

namespace hitp::cli {

enum class Status { pass, fail, skipped };

inline std::string_view to_string(Status s)
{
    switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skipped: return "SKIP";
    }
    return "?";
}

struct Outcome {
    Status status;
    std::string detail;
};

struct Fixture {
    std::string id;
    std::string source;
    std::function<Outcome()> run;
};

struct FixtureResult {
    std::string id;
    Status status;
    std::string detail;
    double seconds;
};

struct RunReport {
    std::vector<FixtureResult> results;

    [[nodiscard]] std::size_t count(Status s) const
    {
        return static_cast<std::size_t>(
            std::count_if(results.begin(), results.end(), [s](const auto& r) { return r.status == s; }));
    }
    [[nodiscard]] bool ok() const { return count(Status::fail) == 0; }
};

namespace detail {

inline Outcome expect(bool ok, const std::string& what)
{
    return {ok ? Status::pass : Status::fail, what};
}

inline std::string dims_str(const CohitDimension& d)
{
    return "(" + std::to_string(d.dim) + ", " + std::to_string(d.ambient) + ", " + std::to_string(d.rank) + ")";
}

/// Scales so the coefficient of the first entry in `order` is 1.
inline std::map<Exponents, unsigned> normalized(const std::map<Exponents, unsigned>& v,
                                                const std::vector<Exponents>& order, PrimeModulus p)
{
    for (const auto& key : order) {
        auto it = v.find(key);
        if (it == v.end() || it->second % p == 0)
            continue;
        const Scalar inv = p.inv(static_cast<Scalar>(it->second % p));
        std::map<Exponents, unsigned> out;
        for (const auto& [k, c] : v)
            if (c % p != 0)
                out[k] = p.mul(static_cast<Scalar>(c % p), inv);
        return out;
    }
    return {};
}

inline std::string show_vector(const std::map<Exponents, unsigned>& v)
{
    std::string out;
    for (const auto& [k, c] : v)
        out += (out.empty() ? "" : " + ") + std::to_string(c) + "*" + exponent_list(Monomial(k));
    return out.empty() ? "0" : out;
}

} // namespace detail

/// Invariant comparison up to one nonzero scalar. Both sides are scaled so
/// the coefficient on the earliest representative in their common support
/// ordering is 1.
inline Outcome compare_invariant(const CohitBasis& basis, const InvariantSpace& inv,
                                 const fixtures::SliceFixture& want)
{
    if (inv.dimension() != want.invariant_dim)
        return {Status::fail, "invariant dim " + std::to_string(inv.dimension()) + ", expected " +
                                  std::to_string(want.invariant_dim)};
    if (inv.dimension() == 0)
        return {Status::pass, "invariant dim 0"};
    std::map<Exponents, unsigned> got;
    const auto& v = inv.kernel_vectors.front();
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0)
            got[basis.monomial(j).exps] = v[j];
    std::vector<Exponents> order;
    for (const auto& mono : basis.monomials())
        order.push_back(mono.exps);
    const auto p = basis.p;
    auto a = detail::normalized(got, order, p);
    auto b = detail::normalized(want.invariant, order, p);
    if (a.empty() && b.empty() && !want.invariant.empty())
        return {Status::fail, "expected support lies outside the computed basis"};
    return detail::expect(a == b, "got " + detail::show_vector(a) + "; expected " + detail::show_vector(b));
}

inline std::vector<Fixture> all_fixtures()
{
    std::vector<Fixture> out;
    auto key = [](std::size_t h, unsigned p, std::uint64_t m) {
        return std::to_string(h) + "-" + std::to_string(p) + "-" + std::to_string(m);
    };

    for (const auto& f : fixtures::basis_fixtures()) {
        out.push_back({"dim-" + key(f.h, f.p, f.m), "printed cohit header (edge-sum)", [f] {
                           auto got = cohit_dimension(f.h, PrimeModulus(f.p), f.m, HitMode::edge_sum);
                           return detail::expect(got == f.dims, "got " + detail::dims_str(got) + ", expected " +
                                                                     detail::dims_str(f.dims));
                       }});
    }
    for (const auto& f : fixtures::basis_fixtures()) {
        out.push_back({"basis-" + key(f.h, f.p, f.m), "printed representative list (balanced order)", [f] {
                           auto b = cohit_basis(f.h, PrimeModulus(f.p), f.m);
                           std::vector<Exponents> got;
                           for (const auto& mono : b.monomials())
                               got.push_back(mono.exps);
                           if (got == f.representatives)
                               return Outcome{Status::pass, std::to_string(got.size()) + " representatives in order"};
                           for (std::size_t i = 0; i < std::min(got.size(), f.representatives.size()); ++i)
                               if (got[i] != f.representatives[i])
                                   return Outcome{Status::fail, "first difference at e_" + std::to_string(i + 1) +
                                                                    ": got " + exponent_list(Monomial(got[i])) +
                                                                    ", expected " +
                                                                    exponent_list(Monomial(f.representatives[i]))};
                           return Outcome{Status::fail, "got " + std::to_string(got.size()) +
                                                            " representatives, expected " +
                                                            std::to_string(f.representatives.size())};
                       }});
    }
    for (const auto& f : fixtures::basis_fixtures()) {
        out.push_back({"inv-" + key(f.h, f.p, f.m), "untwisted invariants vanish", [f] {
                           auto inv = invariants(f.h, PrimeModulus(f.p), f.m, Twist::none);
                           return detail::expect(inv.dimension() == 0,
                                                 "invariant dim " + std::to_string(inv.dimension()));
                       }});
    }
    for (const auto& f : fixtures::slice_fixtures()) {
        out.push_back({"slice-" + std::to_string(f.n) + (f.p == 3 ? "" : "-p" + std::to_string(f.p)),
                       "top-slice invariant line (determinant twist)", [f] {
                           const auto sd = slice_degree(f.n, f.h);
                           auto blocks = build_quotient_blocks(f.h, PrimeModulus(f.p), sd.m);
                           auto inv = invariants(blocks, Twist::det_inverse);
                           return compare_invariant(blocks.basis, inv, f);
                       }});
    }
    for (const auto& f : fixtures::mode_fixtures()) {
        out.push_back({"mode-" + key(f.h, f.p, f.m) + "-" + std::string(to_string(f.mode)), "mode comparison table",
                       [f] {
                           auto got = cohit_dimension(f.h, PrimeModulus(f.p), f.m, f.mode);
                           return detail::expect(got.rank == f.rank && got.dim == f.dim,
                                                 "rank " + std::to_string(got.rank) + ", dim " +
                                                     std::to_string(got.dim) + "; expected rank " +
                                                     std::to_string(f.rank) + ", dim " + std::to_string(f.dim));
                       }});
    }
    for (const auto& f : fixtures::digit_fixtures()) {
        out.push_back({"digit-" + key(f.h, f.p, f.m), "digit signature report", [f] {
                           auto got = digit_report(f.h, PrimeModulus(f.p), f.m);
                           if (got.size() != f.levels.size())
                               return Outcome{Status::fail, "got " + std::to_string(got.size()) + " levels, expected " +
                                                                std::to_string(f.levels.size())};
                           for (std::size_t i = 0; i < got.size(); ++i) {
                               const auto& g = got[i];
                               const auto& w = f.levels[i];
                               if (g.s != w.s || g.d != w.d || g.pivots != w.pivots || g.kept != w.kept)
                                   return Outcome{Status::fail, "level s=" + std::to_string(g.s) + ": pivots " +
                                                                    tuple_list(g.pivots) + ", kept " +
                                                                    tuple_list(g.kept) + "; expected pivots " +
                                                                    tuple_list(w.pivots) + ", kept " +
                                                                    tuple_list(w.kept)};
                           }
                           return Outcome{Status::pass, std::to_string(got.size()) + " levels"};
                       }});
    }
    for (unsigned pv : {3u, 5u, 7u}) {
        out.push_back({"rank1-p" + std::to_string(pv), "rank-1 closed form against hit membership, d <= 200", [pv] {
                           PrimeModulus p(pv);
                           for (std::uint64_t d = 0; d <= 200; ++d) {
                               const bool hit = is_hit(SparsePolynomial(p, Monomial{static_cast<Exponent>(d)}), 1,
                                                       HitMode::full);
                               const bool closed = classify_rank1(d, p) == Rank1Class::hit;
                               if (hit != closed)
                                   return Outcome{Status::fail, "disagreement at d=" + std::to_string(d)};
                           }
                           const Exponent special = pv * (pv + 1) - 1;
                           if (!is_hit(SparsePolynomial(p, Monomial{special}), 1, HitMode::full))
                               return Outcome{Status::fail, "t^" + std::to_string(special) + " is not hit"};
                           return Outcome{Status::pass, "201 degrees agree; t^" + std::to_string(special) + " is hit"};
                       }});
    }
    out.push_back({"lemma-short-cartan", "top-index Cartan identity, example plus 100 random pairs", [] {
                       PrimeModulus p(3);
                       if (!short_cartan_check(Monomial{3, 0}, Monomial{0, 9}, 1, p).ok)
                           return Outcome{Status::fail, "example x^3, y^9 at s=1"};
                       std::mt19937_64 rng(20240601);
                       for (int trial = 0; trial < 100; ++trial) {
                           PrimeModulus q(trial % 2 ? 5 : 3);
                           std::uniform_int_distribution<Exponent> e(0, 40);
                           Monomial x{e(rng), e(rng), e(rng)}, y{e(rng), e(rng), e(rng)};
                           const unsigned s = static_cast<unsigned>(rng() % 3);
                           if (!short_cartan_check(x, y, s, q).ok)
                               return Outcome{Status::fail, "pair " + exponent_list(x) + ", " + exponent_list(y)};
                       }
                       return Outcome{Status::pass, "OK"};
                   }});
    out.push_back({"lemma-graded-additivity", "product of edge representatives, example plus 100 random pairs", [] {
                       PrimeModulus p(3);
                       if (!graded_additivity_check(Monomial{2, 0}, Monomial{0, 4}, 0, 1, p).ok)
                           return Outcome{Status::fail, "example x^2, y^4 at s1=0, s2=1"};
                       std::mt19937_64 rng(20240602);
                       for (int trial = 0; trial < 100; ++trial) {
                           PrimeModulus q(trial % 2 ? 5 : 3);
                           std::uniform_int_distribution<Exponent> e(0, 40);
                           Monomial a{e(rng), e(rng), e(rng)}, b{e(rng), e(rng), e(rng)};
                           const unsigned s1 = static_cast<unsigned>(rng() % 3), s2 = static_cast<unsigned>(rng() % 3);
                           if (!graded_additivity_check(a, b, s1, s2, q).ok)
                               return Outcome{Status::fail, "pair " + exponent_list(a) + ", " + exponent_list(b)};
                       }
                       return Outcome{Status::pass, "OK"};
                   }});

    std::vector<std::pair<std::uint64_t, unsigned>> crossley;
    for (std::uint64_t n = 2; n <= 60; n += 2)
        if (crossley_expected(n, PrimeModulus(3)))
            crossley.emplace_back(n, 3);
    crossley.emplace_back(22, 13);
    for (auto [n, pv] : crossley) {
        const std::string tag = std::to_string(n) + "-p" + std::to_string(pv);
        out.push_back({"crossley-dim-" + tag, "rank-2 slice table", [n, pv] {
                           PrimeModulus p(pv);
                           auto e = crossley_expected(n, p);
                           if (!e->dimension)
                               return Outcome{Status::skipped, "unspecified"};
                           auto got = cohit_dimension(2, p, (n - 2) / 2);
                           return detail::expect(got.dim == *e->dimension,
                                                 "family " + e->family + " (" + e->params + "): dim " +
                                                     std::to_string(got.dim) + ", expected " +
                                                     std::to_string(*e->dimension));
                       }});
        out.push_back({"crossley-inv-" + tag, "rank-2 slice table", [n, pv] {
                           PrimeModulus p(pv);
                           auto e = crossley_expected(n, p);
                           if (!e->invariants)
                               return Outcome{Status::skipped,
                                              "unspecified: family " + e->family + " (" + e->params + ")"};
                           auto inv = invariants(2, p, (n - 2) / 2, Twist::det_inverse);
                           return detail::expect(inv.dimension() == *e->invariants,
                                                 "family " + e->family + " (" + e->params + "): invariants " +
                                                     std::to_string(inv.dimension()) + ", expected " +
                                                     std::to_string(*e->invariants));
                       }});
    }
    return out;
}

/// Runs fixtures whose id matches the glob `filter` (all when empty).
/// Exceptions inside a fixture count as failures.
inline RunReport run_fixtures(const std::string& filter = "")
{
    RunReport report;
    for (const auto& f : all_fixtures()) {
        if (!filter.empty() && fnmatch(filter.c_str(), f.id.c_str(), 0) != 0)
            continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = f.run();
        } catch (const std::exception& e) {
            o = {Status::fail, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.results.push_back({f.id, o.status, o.detail, secs});
    }
    return report;
}

inline std::string render_text(const RunReport& r)
{
    std::ostringstream os;
    for (const auto& res : r.results) {
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.3f", res.seconds);
        os << to_string(res.status) << "  " << res.id << "  (" << secs << " s)  " << res.detail << "\n";
    }
    os << r.count(Status::pass) << " passed, " << r.count(Status::fail) << " failed, " << r.count(Status::skipped)
       << " skipped\n";
    return os.str();
}

inline void to_json(nlohmann::json& j, const RunReport& r)
{
    j = nlohmann::json{{"schema", 1}, {"command", "verify"}, {"results", nlohmann::json::array()}};
    for (const auto& res : r.results)
        j["results"].push_back({{"id", res.id},
                                {"status", std::string(to_string(res.status))},
                                {"detail", res.detail},
                                {"seconds", res.seconds}});
    j["passed"] = r.count(Status::pass);
    j["failed"] = r.count(Status::fail);
    j["skipped"] = r.count(Status::skipped);
}

} // namespace hitp::cli
