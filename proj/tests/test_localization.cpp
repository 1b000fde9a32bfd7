#include <gtest/gtest.h>

#include "augvar/errors.hpp"
#include "augvar/localization.hpp"
#include "test_util.hpp"

using namespace augvar;
using augvar::testing::q;

namespace {

std::vector<std::string> mus(int m)
{
    std::vector<std::string> v;
    for (int i = 1; i <= m; ++i)
        v.push_back("mu" + std::to_string(i));
    return v;
}

// log(1 + x) = sum (-1)^(d-1) x^d / d, expanded with plain series products.
TruncatedSeries log_oracle(int m, int order)
{
    const auto vars = mus(m);
    TruncatedSeries x(vars, order);
    for (int i = 0; i < m; ++i)
        x += TruncatedSeries::variable(vars, order, static_cast<std::size_t>(i));
    TruncatedSeries total(vars, order), power = TruncatedSeries::constant(vars, order, Scalar(q(1)));
    for (int d = 1; d <= order; ++d) {
        power = power * x;
        total += power * q(d % 2 == 1 ? 1 : -1, d);
    }
    return total;
}

}  // namespace

TEST(LocalizationTest, ContributionExamples)
{
    EXPECT_EQ(euler_contribution({{1}, {1}, 1}), q(1));
    EXPECT_EQ(euler_contribution({{-1, -2}, {2, 3}, 3}), q(1, 9));
    EXPECT_EQ(euler_number({{{1}, {1}, 1}, {{1}, {1}, 1}}), q(2));
    EXPECT_THROW(euler_contribution({{0}, {1}, 1}), Error);
    EXPECT_THROW(euler_contribution({{1}, {1}, 0}), Error);
}

TEST(LocalizationTest, CoverWeights)
{
    const auto w1 = hl_cover_weights(1);
    EXPECT_TRUE(w1.numerator.empty());
    EXPECT_TRUE(w1.denominator.empty());
    EXPECT_EQ(w1.automorphisms, 1);
    EXPECT_EQ(euler_contribution(w1), q(1));
    EXPECT_EQ(euler_contribution(hl_cover_weights(2)), q(-1, 4));
    EXPECT_EQ(euler_contribution(hl_cover_weights(3)), q(1, 9));
    EXPECT_EQ(hl_cover_weights(4).numerator, (std::vector<long>{-1, -2, -3}));
    EXPECT_EQ(hl_cover_weights(4).denominator, (std::vector<long>{2, 3, 4}));
    EXPECT_THROW(hl_cover_weights(0), Error);
}

TEST(LocalizationTest, CoverContributionsAreSignedInverseSquares)
{
    for (int d = 1; d <= 20; ++d) {
        const Rational c = euler_contribution(hl_cover_weights(d));
        EXPECT_EQ(c, q(d % 2 == 1 ? 1 : -1, static_cast<long>(d) * d)) << d;
        if (d > 1)
            EXPECT_EQ(c < 0, !(euler_contribution(hl_cover_weights(d - 1)) < 0));
    }
}

TEST(LocalizationTest, DisjointUnionIsMultiplicative)
{
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> w(-6, 6), len(0, 4), aut(1, 5);
    const auto random_point = [&] {
        FixedPointData p;
        for (long i = 0, n = len(rng); i < n; ++i) {
            long x = w(rng);
            p.numerator.push_back(x == 0 ? 1 : x);
        }
        for (long i = 0, n = len(rng); i < n; ++i) {
            long x = w(rng);
            p.denominator.push_back(x == 0 ? -1 : x);
        }
        p.automorphisms = aut(rng);
        return p;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_point(), b = random_point();
        EXPECT_EQ(euler_contribution(disjoint_union(a, b)), euler_contribution(a) * euler_contribution(b));
    }
}

TEST(LocalizationTest, MulticoverExamples)
{
    const auto one = multicover_series(1, 3);
    EXPECT_EQ(one.coefficient({1}), Scalar(q(1)));
    EXPECT_EQ(one.coefficient({2}), Scalar(q(-1, 2)));
    EXPECT_EQ(one.coefficient({3}), Scalar(q(1, 3)));
    const auto two = multicover_series(2, 4);
    EXPECT_EQ(two.coefficient({1, 1}), Scalar(q(-1)));
    EXPECT_EQ(two.coefficient({2, 1}), Scalar(q(1)));
    EXPECT_EQ(two.variables(), mus(2));
}

TEST(LocalizationTest, MulticoverMatchesLogarithm)
{
    for (int m = 1; m <= 3; ++m)
        for (int order = 1; order <= 8; ++order) {
            EXPECT_EQ(multicover_sum(m, order), log_oracle(m, order)) << m << " " << order;
            EXPECT_EQ(multicover_series(m, order), log_oracle(m, order));
        }
    EXPECT_EQ(multicover_series(3, 8).terms().size(), 164u);
}
