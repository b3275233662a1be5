#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hitp/arith.hpp"
#include "hitp/error.hpp"

namespace hitp {

using Exponent = std::uint32_t;

/// Exponent vector of t_1^{e_1} ... t_h^{e_h}. The rank is the vector length.
struct Monomial {
    std::vector<Exponent> exps;

    Monomial() = default;
    explicit Monomial(std::vector<Exponent> e) : exps(std::move(e)) {}
    Monomial(std::initializer_list<Exponent> e) : exps(e) {}

    [[nodiscard]] std::size_t rank() const noexcept { return exps.size(); }
    [[nodiscard]] std::uint64_t degree() const noexcept
    {
        return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
    }
    Exponent operator[](std::size_t i) const { return exps[i]; }
    Exponent& operator[](std::size_t i) { return exps[i]; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps <=> b.exps; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b)
{
    if (a.rank() != b.rank())
        throw DimensionMismatch("monomial ranks differ");
    Monomial out = a;
    for (std::size_t i = 0; i < out.rank(); ++i)
        out[i] += b[i];
    return out;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept
    {
        std::size_t h = m.exps.size();
        for (auto e : m.exps)
            h = h * 1000003u ^ e;
        return h;
    }
};

/// All monomials of degree m in h variables, in the canonical order
/// (first exponent outermost and ascending, remaining coordinates recursively).
class DegreeBasis {
  public:
    DegreeBasis(std::size_t h, std::uint64_t m) : h_(h), m_(m)
    {
        if (h == 0)
            throw DomainError("rank h must be at least 1");
        std::vector<Exponent> cur(h, 0);
        fill(0, static_cast<Exponent>(m), cur);
        index_.reserve(monomials_.size());
        for (std::size_t i = 0; i < monomials_.size(); ++i)
            index_.emplace(monomials_[i], i);
    }

    [[nodiscard]] std::size_t h() const noexcept { return h_; }
    [[nodiscard]] std::uint64_t m() const noexcept { return m_; }
    [[nodiscard]] std::size_t size() const noexcept { return monomials_.size(); }
    [[nodiscard]] const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
    [[nodiscard]] const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
    auto begin() const noexcept { return monomials_.begin(); }
    auto end() const noexcept { return monomials_.end(); }

    [[nodiscard]] std::optional<std::size_t> find(const Monomial& mono) const
    {
        auto it = index_.find(mono);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }
    [[nodiscard]] std::size_t index_of(const Monomial& mono) const
    {
        if (auto i = find(mono))
            return *i;
        throw DomainError("monomial is not in the degree basis");
    }

  private:
    void fill(std::size_t pos, Exponent left, std::vector<Exponent>& cur)
    {
        if (pos + 1 == h_) {
            cur[pos] = left;
            monomials_.emplace_back(cur);
            return;
        }
        for (Exponent a = 0; a <= left; ++a) {
            cur[pos] = a;
            fill(pos + 1, left - a, cur);
        }
    }

    std::size_t h_;
    std::uint64_t m_;
    std::vector<Monomial> monomials_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

inline DegreeBasis enumerate_degree(std::size_t h, std::uint64_t m) { return DegreeBasis(h, m); }

/// binom(m + h - 1, h - 1), the size of DegreeBasis(h, m).
inline std::uint64_t degree_basis_size(std::size_t h, std::uint64_t m)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i < h; ++i)
        r = r * (m + i) / i;
    return r;
}

/// Exponent residues mod p-1; the torus acts on a monomial through these.
using WeightSignature = std::vector<unsigned>;

inline WeightSignature weight_of(const Monomial& mono, PrimeModulus p)
{
    WeightSignature w(mono.rank());
    for (std::size_t i = 0; i < mono.rank(); ++i)
        w[i] = mono[i] % (p - 1);
    return w;
}

/// The s-th base-p digit of every exponent.
inline std::vector<unsigned> digit_signature(const Monomial& mono, unsigned s, PrimeModulus p)
{
    std::vector<unsigned> out(mono.rank());
    for (std::size_t i = 0; i < mono.rank(); ++i)
        out[i] = p_digit(mono[i], s, p);
    return out;
}

enum class MonomialOrder { lex, antilex, balanced, cartan_lex };

inline std::string_view to_string(MonomialOrder o)
{
    switch (o) {
    case MonomialOrder::lex: return "lex";
    case MonomialOrder::antilex: return "antilex";
    case MonomialOrder::balanced: return "balanced";
    case MonomialOrder::cartan_lex: return "cartan-lex";
    }
    return "?";
}

inline MonomialOrder parse_order(std::string_view s)
{
    if (s == "lex")
        return MonomialOrder::lex;
    if (s == "antilex")
        return MonomialOrder::antilex;
    if (s == "balanced")
        return MonomialOrder::balanced;
    if (s == "cartan-lex" || s == "cartan_lex")
        return MonomialOrder::cartan_lex;
    throw DomainError("unknown monomial order '" + std::string(s) + "'");
}

/// Sort key; smaller keys sort earlier. `spread` is compared first, then
/// `tuple` lexicographically.
struct ScoreKey {
    double spread = 0;
    std::vector<std::int64_t> tuple;

    friend bool operator==(const ScoreKey&, const ScoreKey&) = default;
    friend bool operator<(const ScoreKey& a, const ScoreKey& b)
    {
        if (a.spread != b.spread)
            return a.spread < b.spread;
        return a.tuple < b.tuple;
    }
};

/// Key for the lex, antilex and balanced orders. Balanced: h = 2 gives
/// spread |2 e_1 - m|; h >= 3 gives the double sum of (e_i - m/h)^2 taken
/// left to right, whose rounding decides ties between permutations.
inline ScoreKey score(const Monomial& mono, MonomialOrder order, std::size_t h, std::uint64_t m)
{
    ScoreKey key;
    switch (order) {
    case MonomialOrder::lex:
        for (auto e : mono.exps)
            key.tuple.push_back(e);
        return key;
    case MonomialOrder::antilex:
        for (auto e : mono.exps)
            key.tuple.push_back(-static_cast<std::int64_t>(e));
        return key;
    case MonomialOrder::balanced: {
        if (h == 2) {
            key.spread = static_cast<double>(std::abs(2 * static_cast<std::int64_t>(mono[0]) - static_cast<std::int64_t>(m)));
        } else {
            const double mu = static_cast<double>(m) / static_cast<double>(h);
            double v = 0;
            for (auto e : mono.exps) {
                const double d = static_cast<double>(e) - mu;
                const double sq = d * d;
                v = v + sq;
            }
            key.spread = v;
        }
        for (auto e : mono.exps)
            key.tuple.push_back(e);
        return key;
    }
    case MonomialOrder::cartan_lex:
        break;
    }
    throw DomainError("order has no scalar score; use monomial_less");
}

/// Cartan-lex comparison: find the highest base-p level where the digit
/// vectors differ and compare them lexicographically, variable 1 first.
inline std::strong_ordering compare_cartan_lex(const Monomial& a, const Monomial& b, PrimeModulus p)
{
    if (a.rank() != b.rank())
        throw DimensionMismatch("monomial ranks differ");
    Exponent top = 0;
    for (std::size_t i = 0; i < a.rank(); ++i)
        top = std::max({top, a[i], b[i]});
    unsigned levels = 1;
    for (std::uint64_t x = top; x >= p; x /= p)
        ++levels;
    for (unsigned s = levels; s-- > 0;) {
        auto da = digit_signature(a, s, p);
        auto db = digit_signature(b, s, p);
        if (da != db)
            return da <=> db;
    }
    return std::strong_ordering::equal;
}

/// Strict weak ordering used to rank candidates for any MonomialOrder.
inline bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order, std::uint64_t m,
                          PrimeModulus p)
{
    if (order == MonomialOrder::cartan_lex)
        return compare_cartan_lex(a, b, p) == std::strong_ordering::less;
    return score(a, order, a.rank(), m) < score(b, order, b.rank(), m);
}

inline std::string variable_name(std::size_t i)
{
    static constexpr const char* names[] = {"x", "y", "z"};
    if (i < 3)
        return names[i];
    return "t" + std::to_string(i + 1);
}

/// "x^a * y^b * z^c" with unit exponents elided; the constant renders as "1".
inline std::string to_string(const Monomial& mono, std::string_view sep = " * ")
{
    std::string out;
    for (std::size_t i = 0; i < mono.rank(); ++i) {
        if (mono[i] == 0)
            continue;
        if (!out.empty())
            out += sep;
        out += variable_name(i);
        if (mono[i] != 1)
            out += "^" + std::to_string(mono[i]);
    }
    return out.empty() ? "1" : out;
}

/// "[a, b, c]"
inline std::string exponent_list(const Monomial& mono)
{
    std::string out = "[";
    for (std::size_t i = 0; i < mono.rank(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(mono[i]);
    }
    return out + "]";
}

} // namespace hitp
