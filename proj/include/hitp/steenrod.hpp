#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hitp/arith.hpp"
#include "hitp/linalg.hpp"
#include "hitp/monomials.hpp"

namespace hitp {

/// Polynomial over Z/p as a map monomial -> nonzero coefficient.
class SparsePolynomial {
  public:
    using Terms = std::map<Monomial, Scalar>;

    explicit SparsePolynomial(PrimeModulus p) : p_(p) {}
    SparsePolynomial(PrimeModulus p, const Monomial& mono, Scalar c = 1) : p_(p) { add_term(mono, c); }

    [[nodiscard]] PrimeModulus modulus() const noexcept { return p_; }
    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    [[nodiscard]] Scalar coefficient(const Monomial& mono) const
    {
        auto it = terms_.find(mono);
        return it == terms_.end() ? Scalar{0} : it->second;
    }

    void add_term(const Monomial& mono, Scalar c)
    {
        c = static_cast<Scalar>(c % p_);
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(mono, c);
        if (!inserted) {
            it->second = p_.add(it->second, c);
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    /// Degree shared by all terms, or nullopt if the polynomial is zero or
    /// not homogeneous.
    [[nodiscard]] std::optional<std::uint64_t> homogeneous_degree() const
    {
        std::optional<std::uint64_t> d;
        for (const auto& [mono, c] : terms_) {
            if (d && *d != mono.degree())
                return std::nullopt;
            d = mono.degree();
        }
        return d;
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o)
    {
        for (const auto& [mono, c] : o.terms_)
            add_term(mono, c);
        return *this;
    }
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }

    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b)
    {
        SparsePolynomial out(a.p_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(ma * mb, a.p_.mul(ca, cb));
        return out;
    }

    [[nodiscard]] SparsePolynomial scaled(Scalar c) const
    {
        SparsePolynomial out(p_);
        for (const auto& [mono, x] : terms_)
            out.add_term(mono, p_.mul(x, c));
        return out;
    }

    /// g^p: exponents scale by p; coefficients are fixed by Frobenius on Z/p.
    [[nodiscard]] SparsePolynomial frobenius() const
    {
        SparsePolynomial out(p_);
        for (const auto& [mono, c] : terms_) {
            Monomial m = mono;
            for (auto& e : m.exps)
                e *= p_;
            out.add_term(m, c);
        }
        return out;
    }

    /// Coefficient vector over a degree basis.
    [[nodiscard]] Vector coordinates(const DegreeBasis& basis) const
    {
        Vector v(basis.size(), 0);
        for (const auto& [mono, c] : terms_)
            v[basis.index_of(mono)] = c;
        return v;
    }

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b)
    {
        return a.p_ == b.p_ && a.terms_ == b.terms_;
    }

  private:
    PrimeModulus p_;
    Terms terms_;
};

inline std::string to_string(const SparsePolynomial& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (const auto& [mono, c] : f.terms()) {
        if (!out.empty())
            out += " + ";
        out += std::to_string(c) + "*" + to_string(mono);
    }
    return out;
}

enum class HitMode { graded, edge_sum, full };

inline std::string_view to_string(HitMode m)
{
    switch (m) {
    case HitMode::graded: return "graded";
    case HitMode::edge_sum: return "edge-sum";
    case HitMode::full: return "full";
    }
    return "?";
}

inline HitMode parse_mode(std::string_view s)
{
    if (s == "graded")
        return HitMode::graded;
    if (s == "edge-sum" || s == "edge_sum")
        return HitMode::edge_sum;
    if (s == "full")
        return HitMode::full;
    throw DomainError("unknown hit mode '" + std::string(s) + "'");
}

/// Number of levels s = 0, 1, ... with (p-1) p^s <= m.
inline unsigned max_level(std::uint64_t m, PrimeModulus p)
{
    unsigned s = 0;
    while ((p - 1) * ipow(p, s) <= m)
        ++s;
    return s;
}

/// Single-variable term of P^{p^s}: binom(e, p^s) = digit_s(e) times the
/// monomial with that exponent raised by (p-1) p^s.
inline SparsePolynomial edge_image(const Monomial& mono, std::size_t var, unsigned s, PrimeModulus p)
{
    if (var >= mono.rank())
        throw DomainError("variable index out of range");
    SparsePolynomial out(p);
    const unsigned coeff = p_digit(mono[var], s, p);
    if (coeff == 0)
        return out;
    Monomial image = mono;
    image[var] += static_cast<Exponent>((p - 1) * ipow(p, s));
    out.add_term(image, static_cast<Scalar>(coeff));
    return out;
}

/// P^r on a monomial by the Cartan formula: sum over compositions
/// r_1 + ... + r_h = r of prod binom(e_j, r_j) t_j^{e_j + (p-1) r_j}.
/// Prefixes with a vanishing Lucas factor are pruned.
inline SparsePolynomial power_image(const Monomial& mono, std::uint64_t r, PrimeModulus p)
{
    SparsePolynomial out(p);
    const std::size_t h = mono.rank();
    if (h == 0)
        return out;
    Monomial image = mono;
    auto rec = [&](auto&& self, std::size_t j, std::uint64_t left, Scalar coeff) -> void {
        const Exponent e = mono[j];
        if (j + 1 == h) {
            Scalar b = lucas_binom(e, left, p);
            if (b == 0)
                return;
            image[j] = static_cast<Exponent>(e + (p - 1) * left);
            out.add_term(image, p.mul(coeff, b));
            return;
        }
        for (std::uint64_t rj = 0; rj <= std::min<std::uint64_t>(left, e); ++rj) {
            Scalar b = lucas_binom(e, rj, p);
            if (b == 0)
                continue;
            image[j] = static_cast<Exponent>(e + (p - 1) * rj);
            self(self, j + 1, left - rj, p.mul(coeff, b));
        }
        image[j] = e;
    };
    rec(rec, 0, r, 1);
    return out;
}

inline SparsePolynomial full_image(const Monomial& mono, unsigned s, PrimeModulus p)
{
    return power_image(mono, ipow(p, s), p);
}

inline SparsePolynomial edge_sum_image(const Monomial& mono, unsigned s, PrimeModulus p)
{
    SparsePolynomial out(p);
    for (std::size_t v = 0; v < mono.rank(); ++v)
        out += edge_image(mono, v, s, p);
    return out;
}

/// Where a hit-matrix column came from.
struct HitColumn {
    unsigned level;
    Monomial source;
    std::optional<std::size_t> variable; // graded mode only
};

struct HitMatrix {
    HitMode mode;
    std::size_t h;
    PrimeModulus p;
    std::uint64_t m;
    DegreeBasis rows;
    std::vector<HitColumn> columns;
    Matrix matrix;
};

/// Columns: ascending level, then source in enumeration order, then (graded
/// mode only) variable index. Zero columns are kept.
inline HitMatrix hit_matrix(std::size_t h, PrimeModulus p, std::uint64_t m, HitMode mode)
{
    DegreeBasis rows(h, m);
    std::vector<HitColumn> columns;
    std::vector<SparsePolynomial> images;
    const unsigned levels = max_level(m, p);
    for (unsigned s = 0; s < levels; ++s) {
        const std::uint64_t bump = (p - 1) * ipow(p, s);
        DegreeBasis sources(h, m - bump);
        for (const auto& src : sources) {
            switch (mode) {
            case HitMode::graded:
                for (std::size_t v = 0; v < h; ++v) {
                    columns.push_back({s, src, v});
                    images.push_back(edge_image(src, v, s, p));
                }
                break;
            case HitMode::edge_sum:
                columns.push_back({s, src, std::nullopt});
                images.push_back(edge_sum_image(src, s, p));
                break;
            case HitMode::full:
                columns.push_back({s, src, std::nullopt});
                images.push_back(full_image(src, s, p));
                break;
            }
        }
    }
    Matrix mat(p, rows.size(), columns.size());
    for (std::size_t j = 0; j < images.size(); ++j)
        for (const auto& [mono, c] : images[j].terms())
            mat.set(rows.index_of(mono), j, c);
    return {mode, h, p, m, std::move(rows), std::move(columns), std::move(mat)};
}

/// Outcome of a two-route polynomial identity check.
struct IdentityCheck {
    bool ok;
    SparsePolynomial lhs;
    SparsePolynomial rhs;
};

namespace detail {
// Single-variable part of P^r(mono), computed from Lucas binomials.
inline SparsePolynomial lucas_edge_part(const Monomial& mono, std::uint64_t r, PrimeModulus p)
{
    SparsePolynomial out(p);
    for (std::size_t v = 0; v < mono.rank(); ++v) {
        Scalar b = lucas_binom(mono[v], r, p);
        if (b == 0)
            continue;
        Monomial image = mono;
        image[v] += static_cast<Exponent>((p - 1) * r);
        out.add_term(image, b);
    }
    return out;
}
} // namespace detail

/// Top-index part of P^{p^s}(XY): the Cartan summands P^{p^s}(X) Y and
/// X P^{p^s}(Y), each factor restricted to its single-variable terms via
/// Lucas binomials, against edge(X) Y + X edge(Y) built from p-adic digits.
inline IdentityCheck short_cartan_check(const Monomial& x, const Monomial& y, unsigned s, PrimeModulus p)
{
    const std::uint64_t r = ipow(p, s);
    SparsePolynomial X(p, x), Y(p, y);
    SparsePolynomial lhs = detail::lucas_edge_part(x, r, p) * Y + X * detail::lucas_edge_part(y, r, p);
    SparsePolynomial rhs(p);
    for (std::size_t v = 0; v < x.rank(); ++v) {
        rhs += edge_image(x, v, s, p) * Y;
        rhs += X * edge_image(y, v, s, p);
    }
    return {lhs == rhs, std::move(lhs), std::move(rhs)};
}

/// Product of the digit-route edge representatives of [P^{p^s1}(A)] and
/// [P^{p^s2}(B)] against the diagonal (p^s1, p^s2) summand of the Cartan
/// expansion of P^{p^s1 + p^s2}(AB), restricted to edge terms per factor.
inline IdentityCheck graded_additivity_check(const Monomial& a, const Monomial& b, unsigned s1, unsigned s2,
                                             PrimeModulus p)
{
    SparsePolynomial edge_a(p), edge_b(p);
    for (std::size_t v = 0; v < a.rank(); ++v) {
        edge_a += edge_image(a, v, s1, p);
        edge_b += edge_image(b, v, s2, p);
    }
    SparsePolynomial lhs = edge_a * edge_b;
    SparsePolynomial rhs = detail::lucas_edge_part(a, ipow(p, s1), p) * detail::lucas_edge_part(b, ipow(p, s2), p);
    return {lhs == rhs, std::move(lhs), std::move(rhs)};
}

/// Per-level leading-entry structure of graded-mode columns under the
/// Cartan-lex row order.
struct LevelTriangularity {
    unsigned level;
    std::size_t columns;
    std::size_t nonzero_columns;
    std::size_t distinct_leading_rows;
    [[nodiscard]] bool echelon() const noexcept { return distinct_leading_rows == nonzero_columns; }
};

inline std::vector<LevelTriangularity> triangularity_report(std::size_t h, PrimeModulus p, std::uint64_t m)
{
    const auto hm = hit_matrix(h, p, m, HitMode::graded);
    std::vector<LevelTriangularity> out;
    const unsigned levels = max_level(m, p);
    for (unsigned s = 0; s < levels; ++s) {
        LevelTriangularity lt{s, 0, 0, 0};
        std::vector<std::size_t> leads;
        for (std::size_t j = 0; j < hm.columns.size(); ++j) {
            if (hm.columns[j].level != s)
                continue;
            ++lt.columns;
            std::optional<std::size_t> lead;
            for (std::size_t i = 0; i < hm.rows.size(); ++i) {
                if (hm.matrix(i, j) == 0)
                    continue;
                if (!lead || compare_cartan_lex(hm.rows[i], hm.rows[*lead], p) == std::strong_ordering::greater)
                    lead = i;
            }
            if (lead) {
                ++lt.nonzero_columns;
                leads.push_back(*lead);
            }
        }
        std::sort(leads.begin(), leads.end());
        lt.distinct_leading_rows =
            static_cast<std::size_t>(std::unique(leads.begin(), leads.end()) - leads.begin());
        out.push_back(lt);
    }
    return out;
}

} // namespace hitp
