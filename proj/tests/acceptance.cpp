// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "hitp/cli/fixture_data.hpp"
#include "hitp/cohit.hpp"
#include "hitp/glinv.hpp"
#include "hitp/report.hpp"
#include "hitp/steenrod.hpp"

using namespace hitp;
namespace fx = hitp::fixtures;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string key(std::size_t h, unsigned p, std::uint64_t m)
{
    return "(" + std::to_string(h) + "," + std::to_string(p) + "," + std::to_string(m) + ")";
}

std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

// Coefficients over the representatives, scaled so the first nonzero is 1.
std::map<fx::Exponents, unsigned> normalize(const std::map<fx::Exponents, unsigned>& v,
                                            const std::vector<Monomial>& order, PrimeModulus p)
{
    for (const auto& mono : order) {
        auto it = v.find(mono.exps);
        if (it == v.end() || it->second % p == 0)
            continue;
        const Scalar inv = p.inv(static_cast<Scalar>(it->second % p));
        std::map<fx::Exponents, unsigned> out;
        for (const auto& [k, c] : v)
            if (c % p)
                out[k] = p.mul(static_cast<Scalar>(c % p), inv);
        return out;
    }
    return {};
}

SparsePolynomial random_hit(std::size_t h, PrimeModulus p, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint64_t> deg(2, 8);
    std::uniform_int_distribution<unsigned> coeff(0, p - 1);
    for (;;) {
        auto hm = hit_matrix(h, p, deg(rng), HitMode::full);
        SparsePolynomial g(p);
        for (std::size_t j = 0; j < hm.matrix.cols(); ++j) {
            const auto c = static_cast<Scalar>(coeff(rng));
            for (std::size_t i = 0; i < hm.rows.size(); ++i)
                g.add_term(hm.rows[i], p.mul(c, hm.matrix(i, j)));
        }
        if (!g.is_zero())
            return g;
    }
}

Verdict criterion1()
{
    Verdict v;
    double slow = 0, rest = 0;
    for (const auto& f : fx::basis_fixtures()) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto got = cohit_dimension(f.h, PrimeModulus(f.p), f.m, HitMode::edge_sum);
        const double s = seconds_since(t0);
        double& slot = f.m == 65 ? slow : rest;
        slot = std::max(slot, s);
        v.require(got == f.dims, key(f.h, f.p, f.m) + " dims (" + std::to_string(got.dim) + "," +
                                     std::to_string(got.ambient) + "," + std::to_string(got.rank) + ")");
    }
    v.require(rest < 5.0, "small case took " + fmt_seconds(rest));
    v.require(slow < 120.0, "(3,3,65) took " + fmt_seconds(slow));
    if (v.ok)
        v.detail = "6 headers; slowest small case " + fmt_seconds(rest) + ", (3,3,65) " + fmt_seconds(slow);
    return v;
}

Verdict criterion2()
{
    Verdict v;
    for (const auto& f : fx::basis_fixtures()) {
        auto b = cohit_basis(f.h, PrimeModulus(f.p), f.m, HitMode::edge_sum, MonomialOrder::balanced);
        std::vector<fx::Exponents> got;
        for (const auto& mono : b.monomials())
            got.push_back(mono.exps);
        v.require(got == f.representatives, key(f.h, f.p, f.m) + " ordered list differs");
    }
    if (v.ok)
        v.detail = "6 ordered lists";
    return v;
}

Verdict criterion3()
{
    Verdict v;
    for (const auto& f : fx::basis_fixtures()) {
        auto inv = invariants(f.h, PrimeModulus(f.p), f.m, Twist::none);
        v.require(inv.dimension() == 0, key(f.h, f.p, f.m) + " untwisted invariants " +
                                            std::to_string(inv.dimension()));
    }
    for (const auto& f : fx::slice_fixtures()) {
        const PrimeModulus p(f.p);
        const auto sd = slice_degree(f.n, f.h);
        auto blocks = build_quotient_blocks(f.h, p, sd.m);
        auto inv = invariants(blocks, Twist::det_inverse);
        const std::string tag = "n=" + std::to_string(f.n) + " p=" + std::to_string(f.p);
        v.require(inv.dimension() == f.invariant_dim, tag + " invariant dim " + std::to_string(inv.dimension()));
        if (inv.dimension() != 1 || f.invariant_dim != 1)
            continue;
        std::map<fx::Exponents, unsigned> got;
        const auto& k = inv.kernel_vectors.front();
        for (std::size_t j = 0; j < k.size(); ++j)
            if (k[j])
                got[blocks.basis.monomial(j).exps] = k[j];
        const auto order = blocks.basis.monomials();
        v.require(normalize(got, order, p) == normalize(f.invariant, order, p), tag + " invariant vector differs");
    }
    if (v.ok)
        v.detail = "6 untwisted zero; 6 twisted slices match up to scalar";
    return v;
}

Verdict criterion4()
{
    Verdict v;
    for (const auto& f : fx::mode_fixtures()) {
        const auto got = cohit_dimension(f.h, PrimeModulus(f.p), f.m, f.mode);
        v.require(got.rank == f.rank && got.dim == f.dim,
                  key(f.h, f.p, f.m) + " " + std::string(to_string(f.mode)) + " rank " + std::to_string(got.rank) +
                      " dim " + std::to_string(got.dim));
    }
    if (v.ok)
        v.detail = "8 mode rows";
    return v;
}

Verdict criterion5()
{
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    for (unsigned pv : {3u, 5u, 7u}) {
        const PrimeModulus p(pv);
        for (std::uint64_t d = 0; d <= 200; ++d) {
            const bool hit = is_hit(SparsePolynomial(p, Monomial{static_cast<Exponent>(d)}), 1, HitMode::full);
            v.require(hit == (classify_rank1(d, p) == Rank1Class::hit),
                      "d=" + std::to_string(d) + " p=" + std::to_string(pv));
        }
        const Exponent special = pv * (pv + 1) - 1;
        v.require(is_hit(SparsePolynomial(p, Monomial{special}), 1, HitMode::full),
                  "t^" + std::to_string(special) + " not hit");
    }
    const double s = seconds_since(t0);
    v.require(s < 10.0, "took " + fmt_seconds(s));
    if (v.ok)
        v.detail = "603 degrees agree in " + fmt_seconds(s);
    return v;
}

Verdict criterion6()
{
    Verdict v;
    const PrimeModulus p(3);
    std::mt19937_64 rng(20240603);
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t checked = 0;
    for (std::size_t h : {1u, 2u}) {
        for (int trial = 0; trial < 30; ++trial) {
            auto g = random_hit(h, p, rng);
            v.require(is_hit(frobenius_shift(g, h), h, HitMode::full), "frobenius shift of " + to_string(g));
            ++checked;
        }
        for (bool twisted : {false, true}) {
            for (int trial = 0; trial < 30; ++trial) {
                auto g = random_hit(h, p, rng);
                EndomorphismSpec spec{2, {}, {}};
                for (std::size_t j = 0; j < h; ++j) {
                    spec.q.push_back(rng() % 2 ? 1u : 3u);
                    spec.r.push_back(twisted ? static_cast<unsigned>(rng() % 2) : 0u);
                }
                if (twisted && !spec.twisted())
                    spec.r[rng() % h] = 1;
                v.require(is_hit(hit_endomorphism(g, h, spec), h, HitMode::full),
                          std::string(twisted ? "twisted" : "plain") + " endomorphism of " + to_string(g));
                ++checked;
            }
        }
    }
    const double s = seconds_since(t0);
    v.require(s < 60.0, "took " + fmt_seconds(s));
    if (v.ok)
        v.detail = std::to_string(checked) + " hit inputs stay hit in " + fmt_seconds(s);
    return v;
}

Verdict criterion7()
{
    Verdict v;
    v.require(short_cartan_check(Monomial{3, 0}, Monomial{0, 9}, 1, PrimeModulus(3)).ok, "short Cartan example");
    v.require(graded_additivity_check(Monomial{2, 0}, Monomial{0, 4}, 0, 1, PrimeModulus(3)).ok,
              "graded additivity example");
    std::mt19937_64 rng(20240604);
    std::uniform_int_distribution<Exponent> e(0, 40);
    for (int trial = 0; trial < 100; ++trial) {
        const PrimeModulus p(trial % 2 ? 5 : 3);
        Monomial x{e(rng), e(rng), e(rng)}, y{e(rng), e(rng), e(rng)};
        const auto s1 = static_cast<unsigned>(rng() % 3), s2 = static_cast<unsigned>(rng() % 3);
        v.require(short_cartan_check(x, y, s1, p).ok, "short Cartan " + exponent_list(x) + exponent_list(y));
        v.require(graded_additivity_check(x, y, s1, s2, p).ok,
                  "graded additivity " + exponent_list(x) + exponent_list(y));
    }

    std::vector<std::tuple<std::size_t, unsigned, std::uint64_t>> cases;
    for (const auto& f : fx::basis_fixtures())
        cases.emplace_back(f.h, f.p, f.m);
    for (const auto& f : fx::mode_fixtures())
        cases.emplace_back(f.h, f.p, f.m);
    std::size_t columns = 0;
    for (auto [h, pv, m] : cases) {
        const PrimeModulus p(pv);
        for (auto mode : {HitMode::graded, HitMode::edge_sum, HitMode::full}) {
            auto hm = hit_matrix(h, p, m, mode);
            for (std::size_t j = 0; j < hm.matrix.cols(); ++j, ++columns) {
                const auto w = weight_of(hm.columns[j].source, p);
                for (std::size_t i = 0; i < hm.rows.size(); ++i)
                    if (hm.matrix(i, j) && weight_of(hm.rows[i], p) != w)
                        v.require(false, key(h, pv, m) + " column " + std::to_string(j) + " leaves its weight");
            }
        }
    }

    for (const auto& f : fx::slice_fixtures()) {
        const PrimeModulus p(f.p);
        auto blocks = build_quotient_blocks(f.h, p, slice_degree(f.n, f.h).m);
        const auto trivial = trivial_block_signature(f.h, p);
        for (const auto& k : invariants(blocks, Twist::det_inverse).kernel_vectors)
            for (std::size_t j = 0; j < k.size(); ++j)
                if (k[j])
                    v.require(weight_of(blocks.basis.monomial(j), p) == trivial,
                              "n=" + std::to_string(f.n) + " support off the trivial block");
    }
    if (v.ok)
        v.detail = "lemma checks OK on 101 inputs each; " + std::to_string(columns) +
                   " columns weight-preserving; slice supports trivial";
    return v;
}

Verdict criterion8()
{
    Verdict v;
    std::vector<std::pair<std::uint64_t, unsigned>> degrees;
    for (std::uint64_t n = 2; n <= 60; n += 2)
        if (crossley_expected(n, PrimeModulus(3)))
            degrees.emplace_back(n, 3);
    degrees.emplace_back(22, 13);
    std::size_t dims = 0, invs = 0, skipped = 0;
    for (auto [n, pv] : degrees) {
        const PrimeModulus p(pv);
        const auto e = *crossley_expected(n, p);
        const std::uint64_t m = (n - 2) / 2;
        const std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(pv) + " family " + e.family;
        if (e.dimension) {
            const auto got = cohit_dimension(2, p, m).dim;
            v.require(got == *e.dimension, tag + " dim " + std::to_string(got));
            ++dims;
        } else {
            ++skipped;
        }
        if (e.invariants) {
            const auto got = invariants(2, p, m, Twist::det_inverse).dimension();
            v.require(got == *e.invariants, tag + " invariants " + std::to_string(got));
            ++invs;
        } else {
            ++skipped;
        }
    }
    if (v.ok)
        v.detail = std::to_string(dims) + " dimensions and " + std::to_string(invs) + " invariant dimensions match, " +
                   std::to_string(skipped) + " unspecified skipped";
    return v;
}

Verdict criterion9()
{
    Verdict v;
    for (const auto& f : fx::digit_fixtures()) {
        auto got = digit_report(f.h, PrimeModulus(f.p), f.m);
        v.require(got.size() == f.levels.size(), key(f.h, f.p, f.m) + " level count");
        for (std::size_t i = 0; i < std::min(got.size(), f.levels.size()); ++i) {
            const auto& g = got[i];
            const auto& w = f.levels[i];
            v.require(g.s == w.s && g.d == w.d && g.pivots == w.pivots && g.kept == w.kept,
                      key(f.h, f.p, f.m) + " level s=" + std::to_string(g.s));
        }
    }
    if (v.ok)
        v.detail = "4 reports";
    return v;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"cohit dimensions", criterion1},
        {"ordered basis lists", criterion2},
        {"invariants", criterion3},
        {"mode comparison", criterion4},
        {"rank-1 closed form", criterion5},
        {"hit-preserving maps", criterion6},
        {"structural properties", criterion7},
        {"rank-2 slice table", criterion8},
        {"digit reports", criterion9},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.ok;
        std::cout << (v.ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << v.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
