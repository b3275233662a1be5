#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hitp/arith.hpp"
#include "hitp/error.hpp"
#include "hitp/monomials.hpp"

namespace hitp {

/// n = 2m + h.
struct SliceDegree {
    std::uint64_t n;
    std::size_t h;
    std::uint64_t m;
};

inline SliceDegree slice_degree(std::uint64_t n, std::size_t h)
{
    if (h == 0)
        throw DomainError("rank h must be at least 1");
    if (n % 2 != h % 2)
        throw ParityError("wrong parity; n must satisfy n = h (mod 2), got n = " + std::to_string(n) +
                          ", h = " + std::to_string(h));
    if (n < h)
        throw DomainError("n must be at least h");
    return {n, h, (n - h) / 2};
}

/// One of the four rank-3 degree families; unused parameters are ignored.
struct GenericDegreeFamily {
    unsigned t;
    unsigned i = 0;
    unsigned j = 0;
    unsigned k = 0;
};

/// Evaluates family t with q = 2(p-1) after checking its side conditions.
inline std::uint64_t generic_degree(const GenericDegreeFamily& f, PrimeModulus p)
{
    const std::uint64_t q = 2 * (p - 1);
    const std::int64_t i = f.i, j = f.j, k = f.k;
    auto excluded = [&](std::initializer_list<std::int64_t> bad) {
        if (std::find(bad.begin(), bad.end(), j) != bad.end())
            throw DomainError("family " + std::to_string(f.t) + " excludes j = " + std::to_string(j) +
                              " for i = " + std::to_string(i));
    };
    switch (f.t) {
    case 1:
        if (!(k + 2 <= j && j + 2 <= i))
            throw DomainError("family 1 needs 0 <= k <= j - 2 <= i - 4");
        return q * (ipow(p, f.k) + ipow(p, f.j) + ipow(p, f.i)) - 3;
    case 2:
        excluded({i + 2});
        return q * (ipow(p, f.i + 1) + ipow(p, f.j)) - 3;
    case 3:
        excluded({i + 2, i, i - 1});
        return q * (ipow(p, f.i + 1) + 2 * ipow(p, f.i) + ipow(p, f.j)) - 3;
    case 4:
        excluded({i + 2, i + 1, i, i - 1});
        return q * (2 * ipow(p, f.i + 1) + ipow(p, f.i) + ipow(p, f.j)) - 3;
    default:
        throw DomainError("family index must be 1..4, got " + std::to_string(f.t));
    }
}

/// Digit compositions at one level s where the degree digit d_s is nonzero.
struct LevelDigits {
    unsigned s;
    unsigned d;
    std::vector<std::vector<unsigned>> pivots; // permutations of (d, 0, ..., 0), sorted
    std::vector<std::vector<unsigned>> kept;   // the remaining compositions, enumeration order
};

inline std::vector<LevelDigits> digit_report(std::size_t h, PrimeModulus p, std::uint64_t m)
{
    if (h == 0)
        throw DomainError("rank h must be at least 1");
    std::vector<LevelDigits> out;
    const auto digits = p_digits(m, p);
    for (unsigned s = 0; s < digits.size(); ++s) {
        const unsigned d = digits[s];
        if (d == 0)
            continue;
        LevelDigits level{s, d, {}, {}};
        for (std::size_t v = 0; v < h; ++v) {
            std::vector<unsigned> sig(h, 0);
            sig[v] = d;
            level.pivots.push_back(std::move(sig));
        }
        std::sort(level.pivots.begin(), level.pivots.end());
        level.pivots.erase(std::unique(level.pivots.begin(), level.pivots.end()), level.pivots.end());
        for (const auto& mono : DegreeBasis(h, d)) {
            std::vector<unsigned> sig(mono.exps.begin(), mono.exps.end());
            if (!std::binary_search(level.pivots.begin(), level.pivots.end(), sig))
                level.kept.push_back(std::move(sig));
        }
        out.push_back(std::move(level));
    }
    return out;
}

/// Expected rank-2 top-slice data for a tabulated degree. A missing value
/// means the table does not determine it.
struct CrossleyExpectation {
    std::uint64_t n;
    unsigned p;
    std::string family; // "low", "A", "B" or "C"
    std::string params;
    std::optional<std::size_t> dimension;
    std::optional<std::size_t> invariants;
};

/// Matches n against the low-degree row, then the three p-adic rows in table
/// order; the first match wins.
inline std::optional<CrossleyExpectation> crossley_expected(std::uint64_t n, PrimeModulus p)
{
    if (n == 0 || n % 2 != 0)
        return std::nullopt;
    const std::uint64_t pp = p;
    if (n / 2 <= pp - 2)
        return CrossleyExpectation{n, p, "low", "t=" + std::to_string(n / 2), n / 2, 0};

    const std::uint64_t half = (n + 2) / 2; // n = 2 * half - 2
    auto fmt = [](std::initializer_list<std::pair<const char*, std::uint64_t>> kv) {
        std::string out;
        for (const auto& [k, v] : kv) {
            if (!out.empty())
                out += ",";
            out += std::string(k) + "=" + std::to_string(v);
        }
        return out;
    };

    // A: half = ((i+1)p + j + 1) p^s, 0 <= i, j <= p-1.
    for (std::uint64_t ps = 1, s = 0; ps <= half; ps *= pp, ++s) {
        if (half % ps != 0)
            continue;
        const std::uint64_t core = half / ps;
        for (std::uint64_t i = 0; i < pp; ++i) {
            if (core < (i + 1) * pp + 1)
                continue;
            const std::uint64_t j = core - (i + 1) * pp - 1;
            if (j > pp - 1)
                continue;
            const std::uint64_t dim = pp - std::min(i + 1, j) + i;
            return CrossleyExpectation{n, p, "A", fmt({{"i", i}, {"j", j}, {"s", s}}), dim, std::nullopt};
        }
    }

    // B: half = (i+1)p^r + (j+1)p^s, 1 <= i <= p-1, 0 <= j <= p-2, r-1 > s >= 0.
    for (std::uint64_t s = 0, ps = 1; ps <= half; ps *= pp, ++s) {
        for (std::uint64_t r = s + 2, pr = ps * pp * pp; pr <= half; pr *= pp, ++r) {
            for (std::uint64_t i = 1; i <= pp - 1; ++i) {
                if ((i + 1) * pr >= half)
                    continue;
                const std::uint64_t rest = half - (i + 1) * pr;
                if (rest % ps != 0)
                    continue;
                const std::uint64_t j1 = rest / ps;
                if (j1 < 1 || j1 > pp - 1)
                    continue;
                const std::uint64_t j = j1 - 1;
                std::optional<std::size_t> inv;
                if (i == pp - 2 && j == pp - 2 && r >= s + 2)
                    inv = 1;
                return CrossleyExpectation{n, p, "B", fmt({{"i", i}, {"j", j}, {"r", r}, {"s", s}}), pp + 1, inv};
            }
        }
    }

    // C: half = (p^2 + i p + j + 1) p^s, 1 <= i <= j <= p-2.
    for (std::uint64_t ps = 1, s = 0; ps <= half; ps *= pp, ++s) {
        if (half % ps != 0)
            continue;
        const std::uint64_t core = half / ps;
        for (std::uint64_t i = 1; i + 2 <= pp; ++i) {
            if (core < pp * pp + i * pp + 1)
                continue;
            const std::uint64_t j = core - pp * pp - i * pp - 1;
            if (j < i || j + 2 > pp)
                continue;
            return CrossleyExpectation{n, p, "C", fmt({{"i", i}, {"j", j}, {"s", s}}), j - i + 1, std::nullopt};
        }
    }
    return std::nullopt;
}

} // namespace hitp
