#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hitp/cohit.hpp"
#include "hitp/monomials.hpp"

namespace hitp::fixtures {

using Exponents = std::vector<Exponent>;

/// Published cohit data under edge-sum mode and balanced order.
struct BasisFixture {
    std::size_t h;
    unsigned p;
    std::uint64_t m;
    CohitDimension dims;
    std::vector<Exponents> representatives; // in printed order
};

inline const std::vector<BasisFixture>& basis_fixtures()
{
    static const std::vector<BasisFixture> data = {
        {2, 3, 18, {4, 19, 15},
         {
             {8, 10}, {7, 11}, {1, 17}, {17, 1},
         }},
        {3, 3, 5, {14, 21, 7},
         {
             {1, 2, 2}, {2, 1, 2}, {2, 2, 1}, {1, 1, 3}, {1, 3, 1}, {0, 3, 2}, {3, 0, 2}, {0, 2, 3},
             {2, 0, 3}, {2, 3, 0}, {3, 2, 0}, {0, 0, 5}, {0, 5, 0}, {5, 0, 0},
         }},
        {3, 3, 13, {24, 105, 81},
         {
             {4, 4, 5}, {4, 5, 4}, {5, 4, 4}, {3, 5, 5}, {5, 3, 5}, {5, 5, 3}, {2, 5, 6}, {2, 6, 5},
             {5, 2, 6}, {1, 5, 7}, {5, 1, 7}, {5, 7, 1}, {2, 3, 8}, {3, 2, 8}, {3, 8, 2}, {8, 3, 2},
             {2, 8, 3}, {8, 2, 3}, {0, 8, 5}, {5, 8, 0}, {8, 0, 5}, {8, 5, 0}, {0, 5, 8}, {5, 0, 8},
         }},
        {3, 3, 65, {13, 2211, 2198},
         {
             {17, 25, 23}, {16, 23, 26}, {16, 26, 23}, {23, 16, 26}, {7, 26, 32}, {26, 7, 32}, {26, 32, 7},
             {7, 23, 35}, {23, 7, 35}, {23, 35, 7}, {5, 7, 53}, {5, 53, 7}, {53, 5, 7},
         }},
        {3, 5, 21, {97, 253, 156},
         {
             {7, 7, 7}, {6, 7, 8}, {6, 8, 7}, {7, 6, 8}, {7, 8, 6}, {8, 6, 7}, {8, 7, 6}, {5, 8, 8},
             {6, 6, 9}, {6, 9, 6}, {8, 5, 8}, {8, 8, 5}, {9, 6, 6}, {5, 7, 9}, {5, 9, 7}, {7, 5, 9},
             {7, 9, 5}, {9, 5, 7}, {9, 7, 5}, {4, 8, 9}, {4, 9, 8}, {8, 4, 9}, {8, 9, 4}, {9, 4, 8},
             {9, 8, 4}, {4, 7, 10}, {4, 10, 7}, {7, 4, 10}, {7, 10, 4}, {10, 4, 7}, {10, 7, 4}, {3, 9, 9},
             {9, 3, 9}, {9, 9, 3}, {3, 7, 11}, {7, 3, 11}, {7, 11, 3}, {2, 9, 10}, {2, 10, 9}, {9, 2, 10},
             {9, 10, 2}, {10, 2, 9}, {10, 9, 2}, {2, 8, 11}, {2, 11, 8}, {8, 2, 11}, {8, 11, 2}, {11, 2, 8},
             {11, 8, 2}, {1, 9, 11}, {1, 11, 9}, {9, 1, 11}, {9, 11, 1}, {11, 1, 9}, {11, 9, 1}, {1, 8, 12},
             {8, 1, 12}, {8, 12, 1}, {3, 4, 14}, {3, 14, 4}, {4, 3, 14}, {4, 14, 3}, {14, 3, 4}, {14, 4, 3},
             {0, 9, 12}, {0, 12, 9}, {2, 5, 14}, {2, 14, 5}, {5, 2, 14}, {5, 14, 2}, {9, 0, 12}, {9, 12, 0},
             {12, 0, 9}, {12, 9, 0}, {14, 2, 5}, {14, 5, 2}, {1, 6, 14}, {1, 14, 6}, {6, 1, 14}, {6, 14, 1},
             {14, 1, 6}, {14, 6, 1}, {0, 7, 14}, {0, 14, 7}, {7, 0, 14}, {7, 14, 0}, {14, 0, 7}, {14, 7, 0},
             {1, 1, 19}, {1, 19, 1}, {19, 1, 1}, {0, 2, 19}, {0, 19, 2}, {2, 0, 19}, {2, 19, 0}, {19, 0, 2},
             {19, 2, 0},
         }},
        {2, 13, 10, {11, 11, 0},
         {
             {5, 5}, {4, 6}, {6, 4}, {3, 7}, {7, 3}, {2, 8}, {8, 2}, {1, 9}, {9, 1}, {0, 10}, {10, 0},
         }},
    };
    return data;
}

/// Top-slice invariant line under the determinant twist. The coefficients
/// are determined up to one nonzero scalar.
struct SliceFixture {
    std::uint64_t n;
    std::size_t h;
    unsigned p;
    std::size_t invariant_dim;
    std::map<Exponents, unsigned> invariant;
};

inline const std::vector<SliceFixture>& slice_fixtures()
{
    static const std::vector<SliceFixture> data = {
        {38, 2, 3, 1, {{{7, 11}, 1}, {{1, 17}, 2}, {{17, 1}, 1}}},
        {13, 3, 3, 1, {{{1, 1, 3}, 2}, {{1, 3, 1}, 1}}},
        {29, 3, 3, 1,
         {{{3, 5, 5}, 1}, {{5, 3, 5}, 2}, {{5, 5, 3}, 1}, {{1, 5, 7}, 1}, {{5, 1, 7}, 2}, {{5, 7, 1}, 1}}},
        {133, 3, 3, 1,
         {{{17, 25, 23}, 2},
          {{7, 23, 35}, 1},
          {{23, 7, 35}, 2},
          {{23, 35, 7}, 1},
          {{5, 7, 53}, 1},
          {{5, 53, 7}, 2},
          {{53, 5, 7}, 1}}},
        {45, 3, 5, 1, {{{7, 7, 7}, 2}, {{3, 7, 11}, 1}, {{7, 3, 11}, 4}, {{7, 11, 3}, 1}}},
        {22, 2, 13, 0, {}},
    };
    return data;
}

/// Rank and cohit dimension of the hit matrix per mode.
struct ModeFixture {
    std::size_t h;
    unsigned p;
    std::uint64_t m;
    HitMode mode;
    std::size_t rank;
    std::size_t dim;
};

inline const std::vector<ModeFixture>& mode_fixtures()
{
    static const std::vector<ModeFixture> data = {
        {2, 3, 3, HitMode::graded, 2, 2}, {2, 3, 3, HitMode::full, 2, 2},
        {2, 3, 4, HitMode::graded, 4, 1}, {2, 3, 4, HitMode::full, 3, 2},
        {2, 3, 5, HitMode::graded, 4, 2}, {2, 3, 5, HitMode::full, 2, 4},
        {3, 3, 5, HitMode::graded, 15, 6}, {3, 3, 5, HitMode::full, 7, 14},
    };
    return data;
}

using Signature = std::vector<unsigned>;

struct DigitLevelFixture {
    unsigned s;
    unsigned d;
    std::vector<Signature> pivots;
    std::vector<Signature> kept;
};

struct DigitFixture {
    std::size_t h;
    unsigned p;
    std::uint64_t m;
    std::vector<DigitLevelFixture> levels;
};

inline const std::vector<DigitFixture>& digit_fixtures()
{
    static const std::vector<DigitFixture> data = {
        {2, 3, 3, {{1, 1, {{0, 1}, {1, 0}}, {}}}},
        {2, 3, 4, {{0, 1, {{0, 1}, {1, 0}}, {}}, {1, 1, {{0, 1}, {1, 0}}, {}}}},
        {2, 3, 5, {{0, 2, {{0, 2}, {2, 0}}, {{1, 1}}}, {1, 1, {{0, 1}, {1, 0}}, {}}}},
        {3, 3, 5,
         {{0, 2, {{0, 0, 2}, {0, 2, 0}, {2, 0, 0}}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}},
          {1, 1, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}, {}}}},
    };
    return data;
}

} // namespace hitp::fixtures
