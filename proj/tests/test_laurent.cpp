#include <random>

#include <gtest/gtest.h>

#include "augvar/errors.hpp"
#include "augvar/lattice.hpp"
#include "augvar/laurent.hpp"
#include "augvar/polytope.hpp"
#include "test_util.hpp"

using namespace augvar;
using augvar::testing::poly;
using augvar::testing::q;
using augvar::testing::random_poly;

namespace {

const std::vector<std::string> kY{"y1", "y2"};

template <class F>
ErrorKind kind_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::PreconditionViolation;
}

LaurentPoly clifford_potential()
{
    return poly(kY, {{{1, 0}, q(1)}, {{0, 1}, q(1)}, {{-1, -1}, q(-1)}});
}

}  // namespace

TEST(LaurentTest, ProductOfUnitSphereFactors)
{
    const LaurentPoly a = poly(kY, {{{0, 0}, q(1)}, {{1, 0}, q(-1)}});
    const LaurentPoly b = poly(kY, {{{0, 0}, q(1)}, {{0, 1}, q(-1)}});
    EXPECT_EQ(laurent_mul(a, b), poly(kY, {{{0, 0}, q(1)}, {{1, 0}, q(-1)}, {{0, 1}, q(-1)}, {{1, 1}, q(1)}}));
    const LaurentPoly one = LaurentPoly::constant(kY, Scalar(1));
    EXPECT_EQ(laurent_mul(a, one), a);
    const LaurentPoly y1 = LaurentPoly::variable(kY, 0);
    EXPECT_EQ(laurent_mul(y1, LaurentPoly::monomial(kY, {-1, 0}, Scalar(1))), one);
}

TEST(LaurentTest, AnticanonicalRelationFactors)
{
    // 1 - y1^2 + y1 y2 - y1/y2 = (1 - y1/y2)(1 + y1 y2)
    const LaurentPoly w = poly(kY, {{{0, 0}, q(1)}, {{2, 0}, q(-1)}, {{1, 1}, q(1)}, {{1, -1}, q(-1)}});
    const LaurentPoly f = poly(kY, {{{0, 0}, q(1)}, {{1, -1}, q(-1)}});
    const LaurentPoly g = poly(kY, {{{0, 0}, q(1)}, {{1, 1}, q(1)}});
    EXPECT_EQ(laurent_mul(f, g), w);
}

TEST(LaurentTest, VariableMismatch)
{
    const LaurentPoly a = LaurentPoly::variable(kY, 0);
    const LaurentPoly b = LaurentPoly::variable({"x1", "x2"}, 0);
    EXPECT_EQ(kind_of([&] { laurent_mul(a, b); }), ErrorKind::VariableMismatch);
}

TEST(LaurentTest, MultiplicationLawsOnRandomTriples)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = random_poly(rng, 2, 4, -2, 2), b = random_poly(rng, 2, 4, -2, 2), c = random_poly(rng, 2, 3, -2, 2);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(LaurentTest, ClearToVertexExamples)
{
    const ClearedPolynomial c = clear_to_vertex(clifford_potential(), {-1, -1});
    EXPECT_EQ(c.polynomial, poly(kY, {{{2, 1}, q(1)}, {{1, 2}, q(1)}, {{0, 0}, q(-1)}}));
    const LaurentPoly f = poly(kY, {{{0, 0}, q(1)}, {{1, 0}, q(1)}, {{0, 1}, q(1)}});
    EXPECT_EQ(clear_to_vertex(f, {0, 0}).polynomial, f);
    const LaurentPoly cube = poly({"y"}, {{{3}, q(1)}});
    EXPECT_EQ(clear_to_vertex(cube, {3}).polynomial, LaurentPoly::constant({"y"}, Scalar(1)));
    EXPECT_EQ(kind_of([&] { clear_to_vertex(f, {1, 1}); }), ErrorKind::NotAVertex);
}

TEST(LaurentTest, ClearingAlwaysLeavesAConstantTerm)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const auto f = random_poly(rng, 2 + trial % 2, 5, -3, 3);
        const LatticePolytope p = newton_polytope(f);
        for (const auto& v : p.vertices()) {
            const ClearedPolynomial c = clear_to_vertex(f, v, true);
            EXPECT_FALSE(c.polynomial.constant_term().is_zero());
            EXPECT_TRUE(is_unimodular(c.basis_change));
            for (const auto& [e, coef] : c.polynomial.terms())
                for (long x : e)
                    EXPECT_GE(x, 0) << f.to_string();
        }
    }
}

TEST(LaurentTest, SubstituteMonomialExamples)
{
    const LaurentPoly f = poly(kY, {{{0, 0}, q(1)}, {{1, 0}, q(1)}, {{0, 1}, q(1)}});
    EXPECT_EQ(substitute_monomial(f, identity_matrix(2)), f);
    EXPECT_EQ(substitute_monomial(f, {{1, 1}, {0, 1}}), poly(kY, {{{0, 0}, q(1)}, {{1, 0}, q(1)}, {{1, 1}, q(1)}}));
    const LaurentPoly g = poly(kY, {{{2, 0}, q(3)}});
    EXPECT_EQ(substitute_monomial(g, {{0, 1}, {1, 0}}), poly(kY, {{{0, 2}, q(3)}}));
    EXPECT_EQ(kind_of([&] { substitute_monomial(f, {{2, 0}, {0, 1}}); }), ErrorKind::NotUnimodular);
}

TEST(LaurentTest, SubstitutionInverseProperty)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const auto f = random_poly(rng, n, 4, -2, 2);
        const IntMatrix m = random_unimodular(n, rng);
        EXPECT_EQ(substitute_monomial(substitute_monomial(f, m), unimodular_inverse(m)), f);
    }
}

TEST(LaurentTest, SetVarsZero)
{
    const LaurentPoly f = poly(kY, {{{0, 0}, q(1)}, {{1, 0}, q(1)}, {{0, 1}, q(1)}});
    EXPECT_EQ(set_vars_zero(f, "y2"), (UniPoly{q(1), q(1)}));
    EXPECT_EQ(set_vars_zero(LaurentPoly::constant(kY, Scalar(5)), "y1"), UniPoly{q(5)});
    const LaurentPoly g = poly(kY, {{{0, 0}, q(1)}, {{-1, 0}, q(1)}, {{0, 1}, q(1)}});
    EXPECT_EQ(kind_of([&] { set_vars_zero(g, "y2"); }), ErrorKind::NegativeExponentAtZero);
    EXPECT_EQ(restrict_to_zero(f, "y1"), poly({"y2"}, {{{0}, q(1)}, {{1}, q(1)}}));
}

TEST(LaurentTest, PartialDerivatives)
{
    const LaurentPoly f = poly(kY, {{{0, 0}, q(1)}, {{1, 0}, q(1)}, {{0, 1}, q(1)}});
    EXPECT_EQ(partial_derivative(f, "y2"), LaurentPoly::constant(kY, Scalar(1)));
    EXPECT_EQ(partial_derivative(poly({"y"}, {{{-1}, q(1)}}), "y"), poly({"y"}, {{{-2}, q(-1)}}));
    EXPECT_EQ(partial_derivative(poly(kY, {{{1, 1}, q(1)}}), "y1"), LaurentPoly::variable(kY, 1));
}

TEST(LaurentTest, LeibnizRule)
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = random_poly(rng, 2, 4, -2, 3), g = random_poly(rng, 2, 4, -2, 3);
        for (const std::string v : {"y1", "y2"})
            EXPECT_EQ(partial_derivative(f * g, v), partial_derivative(f, v) * g + f * partial_derivative(g, v));
    }
}

TEST(LaurentTest, EvaluateAtScalarsAndSeries)
{
    const LaurentPoly f = poly(kY, {{{0, 0}, q(1)}, {{1, 0}, q(1)}, {{0, 1}, q(1)}});
    EXPECT_TRUE(evaluate(f, {Scalar(-2), Scalar(1)}).is_zero());
    EXPECT_EQ(evaluate(f, {Scalar(1), Scalar(1)}), Scalar(3));
    const LaurentPoly g = poly(kY, {{{0, 0}, q(1)}, {{1, 0}, q(1)}, {{0, 1}, q(-1)}});
    const std::vector<std::string> mu{"mu1"};
    const TruncatedSeries m = TruncatedSeries::variable(mu, 8, 0);
    EXPECT_TRUE(evaluate(g, {m, TruncatedSeries::constant(mu, 8, Scalar(1)) + m}).is_zero());
    EXPECT_EQ(kind_of([&] { evaluate(clifford_potential(), {Scalar(0), Scalar(1)}); }),
              ErrorKind::NotInvertibleAtPoint);
}

TEST(LaurentTest, EvaluationEmbedsRationalsIntoPointRing)
{
    const RingPtr r = Ring::quotient_field(UniPoly{q(-2), q(0), q(1)});
    const LaurentPoly f = poly({"y"}, {{{0}, q(-2)}, {{2}, q(1)}});
    EXPECT_TRUE(evaluate(f, {Scalar::generator(r)}).is_zero());
}

TEST(LaurentTest, JsonRoundTripAndErrors)
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_poly(rng, 3, 5, -3, 3);
        const std::string text = f.to_json().dump();
        EXPECT_EQ(LaurentPoly::from_json(nlohmann::json::parse(text)), f);
        EXPECT_EQ(LaurentPoly::from_json(nlohmann::json::parse(text)).to_json().dump(), text);
    }
    const RingPtr r = Ring::quotient_field(UniPoly{q(-2), q(0), q(1)});
    const LaurentPoly g = LaurentPoly::monomial(kY, {1, -1}, Scalar::generator(r));
    EXPECT_EQ(LaurentPoly::from_json(g.to_json()), g);
    const auto bad = nlohmann::json::parse(R"({"vars":["y1"],"terms":[{"exp":[1,2],"coef":"1"}]})");
    try {
        LaurentPoly::from_json(bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParseError);
        EXPECT_NE(std::string(e.what()).find("$.terms[0].exp"), std::string::npos) << e.what();
    }
}

TEST(LaurentTest, DisplayOrder)
{
    EXPECT_EQ(clifford_potential().to_string(), "-y1^-1*y2^-1 + y1 + y2");
    const LaurentPoly f = poly(kY, {{{0, 0}, q(1)}, {{1, 0}, q(1)}, {{0, 1}, q(-1)}});
    EXPECT_EQ(f.to_string(), "1 + y1 - y2");
}
