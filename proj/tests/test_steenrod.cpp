#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hitp/cli/fixture_data.hpp"
#include "hitp/steenrod.hpp"

using namespace hitp;

namespace {

// Exact binomial from Pascal's rule in 64-bit integers; n stays small here.
std::uint64_t exact_binom(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = std::min(i, k); j > 0; --j)
            row[j] += row[j - 1];
    return row[k];
}

// P^r by enumerating every composition of r into h parts, no pruning.
SparsePolynomial brute_power(const Monomial& mono, std::uint64_t r, PrimeModulus p)
{
    SparsePolynomial out(p);
    const std::size_t h = mono.rank();
    std::vector<std::uint64_t> parts(h, 0);
    auto rec = [&](auto&& self, std::size_t j, std::uint64_t left) -> void {
        if (j + 1 == h) {
            parts[j] = left;
            std::uint64_t coeff = 1;
            Monomial img = mono;
            for (std::size_t v = 0; v < h; ++v) {
                coeff = coeff * (exact_binom(mono[v], parts[v]) % p) % p;
                img[v] = static_cast<Exponent>(mono[v] + (p - 1) * parts[v]);
            }
            out.add_term(img, static_cast<Scalar>(coeff));
            return;
        }
        for (std::uint64_t a = 0; a <= left; ++a) {
            parts[j] = a;
            self(self, j + 1, left - a);
        }
    };
    rec(rec, 0, r);
    return out;
}

bool all_terms_have_degree(const SparsePolynomial& f, std::uint64_t d)
{
    for (const auto& [mono, c] : f.terms())
        if (mono.degree() != d)
            return false;
    return true;
}

struct Case {
    std::size_t h;
    unsigned p;
    std::uint64_t m;
};

std::vector<Case> fixture_cases()
{
    std::vector<Case> out;
    for (const auto& f : fixtures::basis_fixtures())
        out.push_back({f.h, f.p, f.m});
    for (const auto& f : fixtures::mode_fixtures())
        out.push_back({f.h, f.p, f.m});
    return out;
}

} // namespace

TEST(MaxLevel, Examples)
{
    EXPECT_EQ(max_level(18, PrimeModulus(3)), 3u);
    EXPECT_EQ(max_level(1, PrimeModulus(3)), 0u);
    EXPECT_EQ(max_level(65, PrimeModulus(3)), 4u);
    EXPECT_EQ(max_level(10, PrimeModulus(13)), 0u);
}

TEST(EdgeImage, Examples)
{
    const PrimeModulus p(3);
    auto a = edge_image(Monomial{5}, 0, 0, p);
    EXPECT_EQ(a.size(), 1u);
    EXPECT_EQ(a.coefficient(Monomial{7}), 2);
    EXPECT_TRUE(edge_image(Monomial{2}, 0, 1, p).is_zero());
    EXPECT_EQ(edge_image(Monomial{2, 0}, 0, 0, p).coefficient(Monomial{4, 0}), 2);
    EXPECT_THROW(edge_image(Monomial{2, 0}, 2, 0, p), DomainError);
}

TEST(FullImage, Examples)
{
    const PrimeModulus p(3);
    auto f = full_image(Monomial{1, 1}, 0, p);
    EXPECT_EQ(f.size(), 2u);
    EXPECT_EQ(f.coefficient(Monomial{3, 1}), 1);
    EXPECT_EQ(f.coefficient(Monomial{1, 3}), 1);
    for (unsigned s = 0; s < 3; ++s)
        EXPECT_TRUE(full_image(Monomial{0, 0, 0}, s, p).is_zero());
    EXPECT_EQ(full_image(Monomial{2, 2}, 1, p), brute_power(Monomial{2, 2}, 3, p));
}

TEST(FullImage, MatchesCompositionOracle)
{
    for (unsigned pv : {3u, 5u}) {
        const PrimeModulus p(pv);
        for (std::size_t h = 1; h <= 3; ++h)
            for (std::uint64_t m = 0; m <= 8; ++m)
                for (const auto& mono : DegreeBasis(h, m))
                    for (unsigned s = 0; s < 3; ++s)
                        ASSERT_EQ(full_image(mono, s, p), brute_power(mono, ipow(pv, s), p))
                            << exponent_list(mono) << " s=" << s << " p=" << pv;
        for (std::uint64_t r = 0; r <= 7; ++r)
            for (const auto& mono : DegreeBasis(3, 7))
                ASSERT_EQ(power_image(mono, r, p), brute_power(mono, r, p));
    }
}

TEST(FullImage, LevelZeroIsEdgeSum)
{
    for (unsigned pv : {3u, 5u}) {
        const PrimeModulus p(pv);
        for (std::uint64_t m = 0; m <= 8; ++m)
            for (const auto& mono : DegreeBasis(3, m)) {
                SparsePolynomial edges(p);
                for (std::size_t v = 0; v < 3; ++v)
                    edges += edge_image(mono, v, 0, p);
                ASSERT_EQ(full_image(mono, 0, p), edges);
                ASSERT_EQ(edge_sum_image(mono, 0, p), edges);
            }
    }
}

TEST(FullImage, DegreeHomogeneity)
{
    for (unsigned pv : {3u, 5u}) {
        const PrimeModulus p(pv);
        for (std::uint64_t m = 0; m <= 12; ++m)
            for (const auto& mono : DegreeBasis(3, m))
                for (unsigned s = 0; s < 3; ++s) {
                    const std::uint64_t d = m + (pv - 1) * ipow(pv, s);
                    ASSERT_TRUE(all_terms_have_degree(full_image(mono, s, p), d));
                    for (std::size_t v = 0; v < 3; ++v)
                        ASSERT_TRUE(all_terms_have_degree(edge_image(mono, v, s, p), d));
                }
    }
}

TEST(HitMatrix, ColumnProvenance)
{
    const PrimeModulus p(3);
    for (auto mode : {HitMode::graded, HitMode::edge_sum, HitMode::full}) {
        auto hm = hit_matrix(3, p, 13, mode);
        std::size_t expected = 0;
        for (unsigned s = 0; s < max_level(13, p); ++s)
            expected += DegreeBasis(3, 13 - 2 * ipow(3, s)).size() * (mode == HitMode::graded ? 3 : 1);
        ASSERT_EQ(hm.columns.size(), expected);
        ASSERT_EQ(hm.matrix.cols(), expected);
        ASSERT_EQ(hm.matrix.rows(), 105u);
        for (std::size_t j = 1; j < hm.columns.size(); ++j)
            ASSERT_LE(hm.columns[j - 1].level, hm.columns[j].level);
        for (const auto& c : hm.columns)
            ASSERT_EQ(c.variable.has_value(), mode == HitMode::graded);
    }
}

TEST(HitMatrix, ModeRanks)
{
    for (const auto& f : fixtures::mode_fixtures()) {
        auto hm = hit_matrix(f.h, PrimeModulus(f.p), f.m, f.mode);
        EXPECT_EQ(rank(hm.matrix), f.rank) << f.h << "," << f.p << "," << f.m << " " << to_string(f.mode);
        EXPECT_EQ(hm.rows.size() - rank(hm.matrix), f.dim);
    }
    EXPECT_EQ(rank(hit_matrix(2, PrimeModulus(3), 18, HitMode::edge_sum).matrix), 15u);
}

TEST(HitMatrix, WeightPreservation)
{
    for (const auto& c : fixture_cases()) {
        const PrimeModulus p(c.p);
        for (auto mode : {HitMode::graded, HitMode::edge_sum, HitMode::full}) {
            auto hm = hit_matrix(c.h, p, c.m, mode);
            for (std::size_t j = 0; j < hm.columns.size(); ++j) {
                const auto w = weight_of(hm.columns[j].source, p);
                for (std::size_t i = 0; i < hm.rows.size(); ++i)
                    if (hm.matrix(i, j) != 0)
                        ASSERT_EQ(weight_of(hm.rows[i], p), w)
                            << c.h << "," << c.p << "," << c.m << " column " << j;
            }
        }
    }
}

TEST(HitMatrix, EdgeSumInsideGradedSpan)
{
    for (auto [h, pv, m] : std::vector<Case>{{2, 3, 18}, {3, 3, 5}, {3, 3, 13}, {3, 5, 21}, {2, 5, 30}, {3, 3, 20}}) {
        const PrimeModulus p(pv);
        auto graded = hit_matrix(h, p, m, HitMode::graded);
        auto sum = hit_matrix(h, p, m, HitMode::edge_sum);
        ASSERT_GE(rank(graded.matrix), rank(sum.matrix));
        for (std::size_t j = 0; j < sum.matrix.cols(); ++j)
            ASSERT_TRUE(in_column_span(graded.matrix, sum.matrix.column(j)));
    }
}

TEST(ShortCartan, ExamplesAndRandomPairs)
{
    EXPECT_TRUE(short_cartan_check(Monomial{3, 0}, Monomial{0, 9}, 1, PrimeModulus(3)).ok);
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<Exponent> e(0, 60);
    for (int trial = 0; trial < 200; ++trial) {
        const PrimeModulus p(trial % 2 ? 5 : 3);
        Monomial x{e(rng), e(rng), e(rng)}, y{e(rng), e(rng), e(rng)};
        ASSERT_TRUE(short_cartan_check(x, y, static_cast<unsigned>(rng() % 3), p).ok);
    }
}

// Without carries into digit s, the single-variable part of P^{p^s}(XY)
// computed by the Cartan formula on the product equals edge(X)Y + X edge(Y).
TEST(ShortCartan, AgreesWithProductWhenCarryFree)
{
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<Exponent> e(0, 40);
    int checked = 0;
    while (checked < 100) {
        const PrimeModulus p(checked % 2 ? 5 : 3);
        const unsigned s = static_cast<unsigned>(rng() % 3);
        const std::uint64_t ps = ipow(p, s);
        Monomial x{e(rng), e(rng)}, y{e(rng), e(rng)};
        bool carry_free = true;
        for (std::size_t v = 0; v < 2; ++v)
            carry_free = carry_free && (x[v] % ps) + (y[v] % ps) < ps;
        if (!carry_free)
            continue;
        const Monomial xy = x * y;
        SparsePolynomial edge_part(p);
        const auto image = power_image(xy, ps, p);
        for (const auto& [mono, c] : image.terms()) {
            std::size_t moved = 0;
            for (std::size_t v = 0; v < 2; ++v)
                moved += mono[v] != xy[v];
            if (moved == 1)
                edge_part.add_term(mono, c);
        }
        ASSERT_EQ(edge_part, short_cartan_check(x, y, s, p).rhs) << exponent_list(x) << exponent_list(y);
        ++checked;
    }
}

TEST(GradedAdditivity, ExamplesAndRandomPairs)
{
    EXPECT_TRUE(graded_additivity_check(Monomial{2, 0}, Monomial{0, 4}, 0, 1, PrimeModulus(3)).ok);
    std::mt19937_64 rng(107);
    std::uniform_int_distribution<Exponent> e(0, 60);
    for (int trial = 0; trial < 200; ++trial) {
        const PrimeModulus p(trial % 2 ? 5 : 3);
        Monomial a{e(rng), e(rng), e(rng)}, b{e(rng), e(rng), e(rng)};
        ASSERT_TRUE(graded_additivity_check(a, b, static_cast<unsigned>(rng() % 3),
                                            static_cast<unsigned>(rng() % 3), p)
                        .ok);
    }
}

// Leading rows recounted directly from the column images.
TEST(Triangularity, ReportMatchesDirectCount)
{
    const PrimeModulus p(3);
    for (std::uint64_t m = 2; m <= 16; ++m) {
        auto hm = hit_matrix(3, p, m, HitMode::graded);
        for (const auto& lt : triangularity_report(3, p, m)) {
            std::set<Monomial> leads;
            std::size_t nonzero = 0, columns = 0;
            for (std::size_t j = 0; j < hm.columns.size(); ++j) {
                if (hm.columns[j].level != lt.level)
                    continue;
                ++columns;
                const auto& c = hm.columns[j];
                auto img = edge_image(c.source, *c.variable, c.level, p);
                if (img.is_zero())
                    continue;
                ++nonzero;
                leads.insert(img.terms().begin()->first); // graded columns have one term
            }
            ASSERT_EQ(lt.columns, columns);
            ASSERT_EQ(lt.nonzero_columns, nonzero);
            ASSERT_EQ(lt.distinct_leading_rows, leads.size());
        }
    }
}

TEST(Triangularity, CollidingEdgesBreakEchelon)
{
    const PrimeModulus p(3);
    // x-edge of x y^3 and y-edge of x^3 y both give x^3 y^3.
    EXPECT_EQ(edge_image(Monomial{1, 3, 0}, 0, 0, p), edge_image(Monomial{3, 1, 0}, 1, 0, p));
    EXPECT_TRUE(triangularity_report(3, p, 5).front().echelon());
    EXPECT_FALSE(triangularity_report(3, p, 6).front().echelon());
}

TEST(SparsePolynomial, Arithmetic)
{
    const PrimeModulus p(3);
    SparsePolynomial f(p, Monomial{1, 0}), g(p, Monomial{0, 1}, 2);
    auto s = f + g;
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(s.homogeneous_degree(), 1u);
    auto sq = s * s; // x^2 + 4xy + 4y^2 = x^2 + xy + y^2
    EXPECT_EQ(sq.coefficient(Monomial{1, 1}), 1);
    EXPECT_EQ(sq.coefficient(Monomial{0, 2}), 1);
    EXPECT_EQ(s.frobenius().coefficient(Monomial{0, 3}), 2);
    EXPECT_TRUE((f + f.scaled(2)).is_zero());
    EXPECT_FALSE((f + SparsePolynomial(p, Monomial{2, 0})).homogeneous_degree().has_value());
    EXPECT_EQ(to_string(s), "2*y + 1*x");
}

TEST(HitMode, ParseAndPrint)
{
    for (auto m : {HitMode::graded, HitMode::edge_sum, HitMode::full})
        EXPECT_EQ(parse_mode(to_string(m)), m);
    EXPECT_EQ(to_string(HitMode::edge_sum), "edge-sum");
    EXPECT_THROW(parse_mode("sideways"), DomainError);
}
