#include <random>

#include <gtest/gtest.h>

#include "augvar/errors.hpp"
#include "augvar/lattice.hpp"
#include "test_util.hpp"

using namespace augvar;

namespace {

// Cofactor expansion, independent of the elimination routine.
Integer cofactor_det(const IntMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            IntVector row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c)
                    row.push_back(m[r][j]);
            minor.push_back(row);
        }
        const Integer term = Integer(m[0][c]) * cofactor_det(minor);
        total += c % 2 == 0 ? term : Integer(-term);
    }
    return total;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    IntMatrix m(rows, IntVector(cols));
    for (auto& r : m)
        for (auto& x : r)
            x = d(rng);
    return m;
}

}  // namespace

TEST(LatticeTest, DeterminantMatchesCofactorExpansion)
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const IntMatrix m = random_matrix(rng, n, n, 6);
        EXPECT_EQ(determinant(m), cofactor_det(m));
    }
}

TEST(LatticeTest, RandomUnimodularIsInvertible)
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const IntMatrix m = random_unimodular(n, rng);
        EXPECT_TRUE(is_unimodular(m));
        EXPECT_EQ(mat_mul(m, unimodular_inverse(m)), identity_matrix(n));
    }
    EXPECT_THROW(unimodular_inverse({{2, 0}, {0, 1}}), Error);
}

TEST(LatticeTest, HermiteTransformClearsTrailingColumns)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + trial % 4, cols = 2 + trial % 3;
        IntMatrix d = random_matrix(rng, rows, cols, 4);
        if (trial % 5 == 0)
            d.push_back(d.front());  // force a dependent row
        const auto [u, rank] = column_hermite_transform(d, cols);
        EXPECT_TRUE(is_unimodular(u));
        EXPECT_EQ(rank, rank_of(d));
        const IntMatrix du = mat_mul(d, u);
        for (const auto& row : du)
            for (std::size_t j = rank; j < cols; ++j)
                EXPECT_EQ(row[j], 0);
    }
}

TEST(LatticeTest, FrameCoordinatesAreABijectionOnTheAffineLattice)
{
    // points on the plane x + 2y - z = 1 in Z^3
    const std::vector<IntVector> pts{{1, 0, 0}, {0, 1, 1}, {3, 0, 2}, {1, 1, 2}};
    const LatticeFrame f(pts);
    EXPECT_EQ(f.dim(), 2u);
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            const IntVector x = f.from_coords({a, b});
            EXPECT_EQ(x[0] + 2 * x[1] - x[2], 1);
            EXPECT_EQ(f.to_coords(x), (IntVector{a, b}));
        }
    // a pulled-back functional agrees with the coordinate functional
    const IntVector r = f.pull_back({2, -1});
    for (const auto& p : pts)
        EXPECT_EQ(dot(r, vec_sub(p, f.origin())), dot(IntVector{2, -1}, f.to_coords(p)));
}

TEST(LatticeTest, CompletionHasPrescribedFirstRow)
{
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        IntVector w(2 + trial % 3);
        for (auto& x : w)
            x = d(rng);
        const long g = std::abs(gcd_of(w));
        if (g == 0)
            continue;
        for (auto& x : w)
            x /= g;
        const IntMatrix m = complete_to_unimodular(w);
        EXPECT_EQ(m.front(), w);
        EXPECT_TRUE(is_unimodular(m));
    }
}

TEST(LatticeTest, CheckedLongOverflow)
{
    EXPECT_EQ(checked_long(Integer(42)), 42);
    try {
        checked_long(Integer(1) << 70);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Overflow);
    }
}
