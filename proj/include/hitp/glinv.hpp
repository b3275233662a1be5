#pragma once

#include <map>
#include <string>
#include <vector>

#include "hitp/arith.hpp"
#include "hitp/cohit.hpp"
#include "hitp/linalg.hpp"
#include "hitp/monomials.hpp"
#include "hitp/steenrod.hpp"

namespace hitp {

enum class GeneratorKind { scale, swap, transvection };

/// scale(i, lambda): t_i -> lambda t_i; swap(i, j); transvection(i, j):
/// t_j -> t_j - t_i. Indices are 0-based.
struct Generator {
    GeneratorKind kind;
    std::size_t i;
    std::size_t j;
    Scalar lambda;

    friend bool operator==(const Generator&, const Generator&) = default;
};

inline std::string to_string(const Generator& g)
{
    switch (g.kind) {
    case GeneratorKind::scale:
        return "scale(" + std::to_string(g.i + 1) + ", " + std::to_string(g.lambda) + ")";
    case GeneratorKind::swap:
        return "swap(" + std::to_string(g.i + 1) + ", " + std::to_string(g.j + 1) + ")";
    case GeneratorKind::transvection:
        return "transvection(" + std::to_string(g.i + 1) + ", " + std::to_string(g.j + 1) + ")";
    }
    return "?";
}

/// h scalings by the primitive root, h-1 adjacent swaps, then every ordered
/// transvection pair (i outer, j inner).
inline std::vector<Generator> gl_generators(std::size_t h, PrimeModulus p)
{
    if (h == 0)
        throw DomainError("rank h must be at least 1");
    const Scalar lambda = primitive_root(p);
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < h; ++i)
        gens.push_back({GeneratorKind::scale, i, i, lambda});
    for (std::size_t i = 0; i + 1 < h; ++i)
        gens.push_back({GeneratorKind::swap, i, i + 1, 1});
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
            if (i != j)
                gens.push_back({GeneratorKind::transvection, i, j, 1});
    return gens;
}

inline Scalar det_of_generator(const Generator& g, PrimeModulus p)
{
    switch (g.kind) {
    case GeneratorKind::scale: return static_cast<Scalar>(g.lambda % p);
    case GeneratorKind::swap: return p.neg(1);
    case GeneratorKind::transvection: return 1;
    }
    return 1;
}

/// Contragredient action on a monomial.
inline SparsePolynomial act_on_monomial(const Generator& g, const Monomial& mono, PrimeModulus p)
{
    SparsePolynomial out(p);
    switch (g.kind) {
    case GeneratorKind::scale:
        out.add_term(mono, p.pow(p.inv(static_cast<Scalar>(g.lambda % p)), mono[g.i]));
        break;
    case GeneratorKind::swap: {
        Monomial img = mono;
        std::swap(img[g.i], img[g.j]);
        out.add_term(img, 1);
        break;
    }
    case GeneratorKind::transvection: {
        const Exponent ai = mono[g.i], aj = mono[g.j];
        Monomial img = mono;
        for (Exponent u = 0; u <= aj; ++u) {
            Scalar c = lucas_binom(aj, u, p);
            if (c == 0)
                continue;
            if ((aj - u) % 2 == 1)
                c = p.neg(c);
            img[g.i] = ai + aj - u;
            img[g.j] = u;
            out.add_term(img, c);
        }
        break;
    }
    }
    return out;
}

inline Matrix ambient_matrix(const Generator& g, const DegreeBasis& basis, PrimeModulus p)
{
    Matrix a(p, basis.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const auto image = act_on_monomial(g, basis[c], p);
        for (const auto& [mono, x] : image.terms())
            a.set(basis.index_of(mono), c, x);
    }
    return a;
}

inline Matrix ambient_matrix(const Generator& g, std::size_t h, PrimeModulus p, std::uint64_t m)
{
    return ambient_matrix(g, DegreeBasis(h, m), p);
}

/// d x d matrix of g on the quotient: column j holds the coordinates of g
/// applied to representative j.
inline Matrix quotient_action(const Generator& g, const QuotientBlocks& blocks)
{
    const auto& basis = blocks.basis;
    const auto p = basis.p;
    const std::size_t d = basis.dimension();
    Matrix a(p, d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const auto image = act_on_monomial(g, basis.monomial(j), p);
        for (const auto& [mono, x] : image.terms()) {
            const std::size_t col = basis.rows.index_of(mono);
            for (std::size_t i = 0; i < d; ++i)
                a.add_to(i, j, p.mul(x, blocks.projector(i, col)));
        }
    }
    return a;
}

enum class Twist { none, det_inverse };

inline std::string_view to_string(Twist t) { return t == Twist::none ? "none" : "det-inverse"; }

struct InvariantSpace {
    Twist twist;
    std::vector<Vector> kernel_vectors; // coordinates over the representatives
    [[nodiscard]] std::size_t dimension() const noexcept { return kernel_vectors.size(); }
};

/// Common kernel of (A_g tau(g) - I) over the generators, tau(g) = 1 or
/// det(g)^{-1}.
inline InvariantSpace invariants(const QuotientBlocks& blocks, Twist twist)
{
    const auto p = blocks.basis.p;
    const std::size_t d = blocks.basis.dimension();
    if (d == 0)
        return {twist, {}};
    const auto id = Matrix::identity(p, d);
    Matrix stack(p, 0, d);
    for (const auto& g : gl_generators(blocks.basis.h, p)) {
        Matrix a = quotient_action(g, blocks);
        if (twist == Twist::det_inverse)
            a = a.scaled(p.inv(det_of_generator(g, p)));
        stack = stack.vcat(a - id);
    }
    return {twist, right_kernel_basis(stack)};
}

inline InvariantSpace invariants(std::size_t h, PrimeModulus p, std::uint64_t m, Twist twist,
                                 HitMode mode = HitMode::edge_sum, MonomialOrder order = MonomialOrder::balanced,
                                 const std::vector<Monomial>& prefer = {})
{
    return invariants(build_quotient_blocks(h, p, m, mode, order, prefer), twist);
}

/// Positions of DegreeBasis(h, m) grouped by weight signature.
struct WeightBlockDecomposition {
    std::map<WeightSignature, std::vector<std::size_t>> blocks;
};

inline WeightBlockDecomposition weight_blocks(const DegreeBasis& basis, PrimeModulus p)
{
    WeightBlockDecomposition out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        out.blocks[weight_of(basis[i], p)].push_back(i);
    return out;
}

inline WeightBlockDecomposition weight_blocks(std::size_t h, PrimeModulus p, std::uint64_t m)
{
    return weight_blocks(DegreeBasis(h, m), p);
}

/// All coordinates p-2.
inline WeightSignature trivial_block_signature(std::size_t h, PrimeModulus p)
{
    return WeightSignature(h, p - 2);
}

} // namespace hitp
