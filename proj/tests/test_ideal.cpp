#include <gtest/gtest.h>

#include <epsmult/errors.hpp>
#include <epsmult/ideal.hpp>

#include "oracle.hpp"

using namespace epsmult;

namespace
{

RingPtr example()
{
    return AffineSemigroupRing::semigroup({"x", "y"}, {{1, 0}, {0, 2}, {0, 3}});
}

RingPtr plane()
{
    return AffineSemigroupRing::polynomial({"x", "y"});
}

MonomialIdeal make(const RingPtr &r, std::vector<ExponentVector> gens)
{
    return MonomialIdeal::from_generators(r, std::move(gens));
}

std::vector<ExponentVector> gens(const MonomialIdeal &i)
{
    return i.generators();
}

} // namespace

TEST(Construction, MinimalizesAndSorts)
{
    const auto r = plane();
    const auto i = make(r, {{1, 1}, {2, 0}, {3, 1}, {2, 0}});
    EXPECT_EQ(gens(i), (std::vector<ExponentVector>{{1, 1}, {2, 0}}));
    EXPECT_TRUE(MonomialIdeal::unit(r).is_unit());
    EXPECT_TRUE(MonomialIdeal::zero(r).is_zero());
    EXPECT_TRUE(make(r, {{0, 0}, {4, 4}}).is_unit());
}

TEST(Construction, SemigroupDivisibilityNotComponentwise)
{
    // (0,2) does not S-divide (0,3): the difference y is not in S.
    const auto r = example();
    const auto i = make(r, {{0, 2}, {0, 3}});
    EXPECT_EQ(gens(i).size(), 2u);
    EXPECT_FALSE(i.contains(ExponentVector{0, 1}));
    EXPECT_TRUE(i.contains(ExponentVector{0, 5}));
    EXPECT_THROW(make(r, {{0, 1}}), std::exception);
}

TEST(Arithmetic, ExampleProductsAndPowers)
{
    const auto r = example();
    const auto i = make(r, {{2, 0}, {1, 2}});
    EXPECT_EQ(gens(power(i, 3)), (std::vector<ExponentVector>{{3, 6}, {4, 4}, {5, 2}, {6, 0}}));
    EXPECT_TRUE(power(i, 0).is_unit());
    EXPECT_EQ(power(i, 2), product(i, i));
    const auto m = maximal_ideal(r);
    EXPECT_EQ(gens(m), (std::vector<ExponentVector>{{0, 2}, {0, 3}, {1, 0}}));
}

TEST(Arithmetic, PolynomialExamples)
{
    const auto r = plane();
    const auto i = make(r, {{2, 0}, {1, 1}});
    EXPECT_EQ(power(i, 2), make(r, {{4, 0}, {3, 1}, {2, 2}}));
    EXPECT_EQ(colon(i, maximal_ideal(r)), make(r, {{1, 0}}));
    EXPECT_EQ(saturate(i), make(r, {{1, 0}}));
    EXPECT_EQ(intersect(make(r, {{2, 0}}), make(r, {{1, 0}, {0, 2}})), make(r, {{2, 0}}));
    EXPECT_EQ(sum(make(r, {{2, 0}}), make(r, {{0, 3}})), make(r, {{2, 0}, {0, 3}}));
}

TEST(Colon, ExampleRingFrozenValues)
{
    const auto r = example();
    const auto i = make(r, {{2, 0}, {1, 2}});
    const auto m = maximal_ideal(r);
    EXPECT_EQ(gens(colon_power(power(i, 4), m, 2)),
              (std::vector<ExponentVector>{{4, 6}, {4, 7}, {5, 4}, {5, 5}, {6, 2}, {6, 3}, {7, 0}}));
    EXPECT_EQ(gens(colon_power(power(i, 2), m, 2)), (std::vector<ExponentVector>{{2, 2}, {2, 3}, {3, 0}}));
    EXPECT_EQ(intersect(make(r, {{2, 0}}), make(r, {{1, 0}, {0, 2}})), make(r, {{2, 0}}));
}

TEST(Colon, CertificateIsReported)
{
    const auto r = example();
    const auto i = make(r, {{2, 0}, {1, 2}});
    const auto res = colon_certified(power(i, 3), maximal_ideal(r));
    ASSERT_TRUE(res.certificate.has_value());
    EXPECT_GE(res.certificate->verified_at, 2 * res.certificate->bound_used);
    const auto poly = colon_certified(make(plane(), {{2, 0}}), make(plane(), {{1, 0}}));
    EXPECT_FALSE(poly.certificate.has_value());
}

TEST(Colon, TooSmallWindowIsDetected)
{
    const auto r = example();
    const auto i = power(make(r, {{2, 0}, {1, 2}}), 4);
    ComputeOptions opts;
    opts.window_bound = 5;
    EXPECT_THROW(colon(i, maximal_ideal(r), opts), StabilityFailure);
    opts.window_bound = 1;
    EXPECT_THROW(colon(i, maximal_ideal(r), opts), StabilityFailure);
    EXPECT_THROW(intersect(i, make(r, {{0, 2}}), opts), StabilityFailure);
}

TEST(Colon, ZeroDivisorIdealIsRejected)
{
    const auto r = plane();
    EXPECT_THROW(colon(make(r, {{1, 0}}), MonomialIdeal::zero(r)), PreconditionError);
}

TEST(Colon, RingMismatchIsRejected)
{
    const auto a = make(plane(), {{1, 0}});
    const auto b = make(example(), {{1, 0}});
    EXPECT_THROW(sum(a, b), RingMismatch);
    EXPECT_THROW(colon(a, b), RingMismatch);
    EXPECT_THROW(intersect(a, b), RingMismatch);
}

TEST(Colon, ByUnitAndBySelf)
{
    const auto r = example();
    const auto i = make(r, {{2, 0}, {1, 2}});
    EXPECT_EQ(colon(i, MonomialIdeal::unit(r)), i);
    EXPECT_TRUE(colon(i, i).is_unit());
    EXPECT_TRUE(colon(MonomialIdeal::zero(r), i).is_zero());
}

TEST(Saturation, ExamplePowersSaturateToXPowers)
{
    const auto r = example();
    const auto i = make(r, {{2, 0}, {1, 2}});
    for (int m = 1; m <= 5; ++m) {
        EXPECT_EQ(saturate(power(i, m)), principal(r, ExponentVector{m, 0})) << m;
    }
}

TEST(Saturation, PrimaryIdealsSaturateToUnit)
{
    const auto r = example();
    const auto m = maximal_ideal(r);
    EXPECT_TRUE(saturate(power(m, 3)).is_unit());
    EXPECT_TRUE(is_m_primary(power(m, 2)));
    EXPECT_FALSE(is_m_primary(make(r, {{2, 0}, {1, 2}})));
    EXPECT_FALSE(is_m_primary(MonomialIdeal::unit(r)));
    EXPECT_EQ(saturate_counted(power(m, 3), m).iterations, 3);
}

TEST(Saturation, AgreesWithOracleOnExamplePowers)
{
    const auto r = example();
    oracle::Semigroup s(*r);
    const auto i = make(r, {{2, 0}, {1, 2}});
    for (int m = 1; m <= 3; ++m) {
        const auto im = power(i, m);
        const auto g = oracle::gens_of(im);
        auto pred = [&](const oracle::Point &p) { return oracle::in_saturation(s, g, p); };
        EXPECT_FALSE(oracle::first_disagreement(s, saturate(im), pred, 12).has_value());
    }
}

TEST(Printing, MonomialsAndIdeals)
{
    const auto r = example();
    EXPECT_EQ(monomial_to_string(*r, {0, 0}), "1");
    EXPECT_EQ(monomial_to_string(*r, {1, 2}), "x*y^2");
    EXPECT_EQ(to_string(make(r, {{2, 0}, {1, 2}})), "ideal(x*y^2, x^2)");
}
