#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hitp/arith.hpp"
#include "hitp/linalg.hpp"
#include "hitp/monomials.hpp"
#include "hitp/steenrod.hpp"

namespace hitp {

struct CohitDimension {
    std::size_t dim;
    std::size_t ambient;
    std::size_t rank;
    friend bool operator==(const CohitDimension&, const CohitDimension&) = default;
};

inline CohitDimension cohit_dimension(std::size_t h, PrimeModulus p, std::uint64_t m, HitMode mode = HitMode::edge_sum)
{
    const auto hm = hit_matrix(h, p, m, mode);
    const std::size_t r = independent_column_indices(hm.matrix).size();
    return {hm.rows.size() - r, hm.rows.size(), r};
}

/// Monomial representatives of the cohit quotient, chosen greedily.
struct CohitBasis {
    std::size_t h;
    PrimeModulus p;
    std::uint64_t m;
    HitMode mode;
    MonomialOrder order;
    std::vector<Monomial> prefer;
    DegreeBasis rows;
    std::vector<std::size_t> representatives; // positions in rows
    std::size_t rank;                         // rank of the hit matrix

    [[nodiscard]] std::size_t dimension() const noexcept { return representatives.size(); }
    [[nodiscard]] std::size_t ambient() const noexcept { return rows.size(); }
    [[nodiscard]] const Monomial& monomial(std::size_t i) const { return rows[representatives.at(i)]; }
    [[nodiscard]] std::vector<Monomial> monomials() const
    {
        std::vector<Monomial> out;
        for (auto i : representatives)
            out.push_back(rows[i]);
        return out;
    }
};

/// Basis plus the data that projects ambient vectors onto it.
/// projector is the top d x N block of inverse([Q | Mb]); it is computed as
/// (K_R)^{-1} K for K any basis of the annihilator of the hit span, K_R the
/// representative columns of K.
struct QuotientBlocks {
    CohitBasis basis;
    std::vector<std::size_t> image_column_indices;
    Matrix image_columns; // Mb
    Matrix projector;

    /// [Q | Mb]; square of size ambient.
    [[nodiscard]] Matrix combined() const
    {
        Matrix q(basis.p, basis.ambient(), basis.dimension());
        for (std::size_t j = 0; j < basis.dimension(); ++j)
            q.set(basis.representatives[j], j, 1);
        return q.hcat(image_columns);
    }

    [[nodiscard]] Matrix combined_inverse() const { return inverse(combined()); }
};

namespace detail {

inline std::vector<Monomial> candidate_order(const DegreeBasis& rows, const std::vector<Monomial>& prefer,
                                             MonomialOrder order, PrimeModulus p)
{
    for (const auto& mono : prefer) {
        if (mono.rank() != rows.h() || mono.degree() != rows.m())
            throw DomainError("preferred monomial " + exponent_list(mono) + " is not of degree " +
                              std::to_string(rows.m()) + " in " + std::to_string(rows.h()) + " variables");
    }
    std::vector<Monomial> sorted = rows.monomials();
    if (order == MonomialOrder::cartan_lex) {
        std::stable_sort(sorted.begin(), sorted.end(), [&](const Monomial& a, const Monomial& b) {
            return compare_cartan_lex(a, b, p) == std::strong_ordering::less;
        });
    } else {
        std::vector<std::pair<ScoreKey, std::size_t>> keyed;
        keyed.reserve(sorted.size());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            keyed.emplace_back(score(sorted[i], order, rows.h(), rows.m()), i);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Monomial> out;
        out.reserve(sorted.size());
        for (const auto& [key, i] : keyed)
            out.push_back(rows[i]);
        sorted = std::move(out);
    }
    std::vector<Monomial> out = prefer;
    out.insert(out.end(), sorted.begin(), sorted.end());
    return out;
}

} // namespace detail

/// Greedy representatives and projector. A unit vector e_i raises the rank
/// of [hit | accepted units] iff K e_i leaves the span of the accepted K e_j,
/// so the greedy runs in the d-dimensional space K maps onto.
inline QuotientBlocks build_quotient_blocks(std::size_t h, PrimeModulus p, std::uint64_t m,
                                            HitMode mode = HitMode::edge_sum,
                                            MonomialOrder order = MonomialOrder::balanced,
                                            const std::vector<Monomial>& prefer = {})
{
    auto hm = hit_matrix(h, p, m, mode);
    const std::size_t n = hm.rows.size();
    auto candidates = detail::candidate_order(hm.rows, prefer, order, p);

    SpanBuilder hit_span(p, n);
    std::vector<std::size_t> image_idx;
    for (std::size_t j = 0; j < hm.matrix.cols() && hit_span.dimension() < n; ++j)
        if (hit_span.add(hm.matrix.column(j)))
            image_idx.push_back(j);
    const std::size_t r = hit_span.dimension();
    const std::size_t d = n - r;

    const auto annihilator = hit_span.annihilator();
    if (annihilator.size() != d)
        throw ConsistencyError("annihilator has dimension " + std::to_string(annihilator.size()) + ", expected " +
                               std::to_string(d));
    Matrix k(p, d, n);
    for (std::size_t i = 0; i < d; ++i)
        std::copy(annihilator[i].begin(), annihilator[i].end(), k.row(i).begin());

    SpanBuilder quotient_span(p, d);
    std::vector<std::size_t> reps;
    for (const auto& mono : candidates) {
        if (quotient_span.dimension() == d)
            break;
        const std::size_t i = hm.rows.index_of(mono);
        if (quotient_span.add(k.column(i)))
            reps.push_back(i);
    }
    if (reps.size() != d)
        throw ConsistencyError("greedy basis stopped at " + std::to_string(reps.size()) + " of " +
                               std::to_string(d) + " representatives");

    Matrix projector = d == 0 ? Matrix(p, 0, n) : inverse(k.select_columns(reps)) * k;
    Matrix image = hm.matrix.select_columns(image_idx);
    CohitBasis basis{h, p, m, mode, order, prefer, std::move(hm.rows), std::move(reps), r};
    return {std::move(basis), std::move(image_idx), std::move(image), std::move(projector)};
}

inline CohitBasis cohit_basis(std::size_t h, PrimeModulus p, std::uint64_t m, HitMode mode = HitMode::edge_sum,
                              MonomialOrder order = MonomialOrder::balanced, const std::vector<Monomial>& prefer = {})
{
    return build_quotient_blocks(h, p, m, mode, order, prefer).basis;
}

/// Coordinates of the class of v over the representatives.
inline Vector quotient_coordinates(const QuotientBlocks& blocks, std::span<const Scalar> v)
{
    if (v.size() != blocks.basis.ambient())
        throw DimensionMismatch("vector length " + std::to_string(v.size()) + " != ambient " +
                                std::to_string(blocks.basis.ambient()));
    return blocks.projector.apply(v);
}

/// Membership of a homogeneous polynomial in the hit subspace.
inline bool is_hit(const SparsePolynomial& f, std::size_t h, HitMode mode = HitMode::full)
{
    if (f.is_zero())
        return true;
    auto deg = f.homogeneous_degree();
    if (!deg)
        throw DomainError("is_hit needs a homogeneous polynomial");
    for (const auto& [mono, c] : f.terms())
        if (mono.rank() != h)
            throw DimensionMismatch("polynomial rank differs from h");
    const auto hm = hit_matrix(h, f.modulus(), *deg, mode);
    return in_column_span(hm.matrix, f.coordinates(hm.rows));
}

enum class Rank1Class { hit, nonhit };

inline std::string_view to_string(Rank1Class c) { return c == Rank1Class::hit ? "hit" : "nonhit"; }

/// t^d is nonhit iff d = 0 or d + 1 has exactly one nonzero base-p digit.
inline Rank1Class classify_rank1(std::uint64_t d, PrimeModulus p)
{
    if (d == 0)
        return Rank1Class::nonhit;
    unsigned nonzero = 0;
    for (std::uint64_t x = d + 1; x > 0; x /= p)
        nonzero += (x % p) != 0;
    return nonzero == 1 ? Rank1Class::nonhit : Rank1Class::hit;
}

/// Multiplier prod_j t_j^{e_j} with e_j = q_j p^{t+1+r_j} if r_j > 0 and
/// q_j p^{t+1} otherwise. With all r_j = 0 this is the plain form.
struct EndomorphismSpec {
    unsigned t = 1;
    std::vector<Exponent> q;
    std::vector<unsigned> r;

    [[nodiscard]] bool twisted() const
    {
        return std::any_of(r.begin(), r.end(), [](unsigned x) { return x > 0; });
    }
};

inline void validate(const EndomorphismSpec& spec, std::size_t h, PrimeModulus p)
{
    if (spec.q.size() != h || spec.r.size() != h)
        throw DimensionMismatch("endomorphism needs q and r of length h");
    if (spec.t < 1)
        throw DomainError("t must be at least 1");
    for (auto qj : spec.q)
        if (qj == 0)
            throw DomainError("every q_j must be positive");
    for (auto rj : spec.r)
        if (rj > p - 1)
            throw DomainError("every r_j must lie in [0, p-1]");
    if (spec.twisted()) {
        if (spec.t < 2)
            throw DomainError("t must be at least 2 when some r_j is nonzero");
        for (auto qj : spec.q)
            if (qj % p == p - 1)
                throw DomainError("q_j = p-1 (mod p) is not allowed when some r_j is nonzero");
    }
}

inline Monomial endomorphism_multiplier(const EndomorphismSpec& spec, PrimeModulus p)
{
    Monomial mult(std::vector<Exponent>(spec.q.size(), 0));
    for (std::size_t j = 0; j < spec.q.size(); ++j) {
        mult[j] = static_cast<Exponent>(spec.q[j] * ipow(p, spec.t + 1 + spec.r[j]));
    }
    return mult;
}

/// multiplier * g^p.
inline SparsePolynomial hit_endomorphism(const SparsePolynomial& g, std::size_t h, const EndomorphismSpec& spec)
{
    const auto p = g.modulus();
    validate(spec, h, p);
    return SparsePolynomial(p, endomorphism_multiplier(spec, p)) * g.frobenius();
}

/// t_1^{p-1} g^p.
inline SparsePolynomial frobenius_shift(const SparsePolynomial& g, std::size_t h)
{
    const auto p = g.modulus();
    Monomial mult(std::vector<Exponent>(h, 0));
    mult[0] = p - 1;
    return SparsePolynomial(p, mult) * g.frobenius();
}

} // namespace hitp
