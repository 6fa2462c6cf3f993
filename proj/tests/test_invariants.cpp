#include <gtest/gtest.h>

#include <epsmult/errors.hpp>
#include <epsmult/invariants.hpp>

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

MonomialIdeal example_i()
{
    return make(example(), {{2, 0}, {1, 2}});
}

Rational distance(const Rational &a, const Rational &b)
{
    return a > b ? Rational(a - b) : Rational(b - a);
}

} // namespace

TEST(Lengths, Colength)
{
    const auto r = example();
    EXPECT_EQ(colength(make(r, {{1, 0}, {0, 2}})).count, 2u);
    EXPECT_EQ(colength(power(maximal_ideal(r), 4)).count, 16u);
    EXPECT_EQ(colength(power(maximal_ideal(plane()), 4)).count, 10u);
    EXPECT_EQ(colength(MonomialIdeal::unit(r)).count, 0u);
    EXPECT_FALSE(colength(example_i()).finite);
}

TEST(Lengths, ColengthMatchesOracleCount)
{
    const auto r = example();
    oracle::Semigroup s(*r);
    const auto k = make(r, {{3, 0}, {1, 3}, {0, 5}, {2, 2}});
    EXPECT_EQ(static_cast<long>(colength(k).count), oracle::count_outside(s, oracle::gens_of(k), 20));
}

TEST(Lengths, H0)
{
    const auto p = make(plane(), {{2, 0}, {1, 1}});
    const auto h = h0_length(p);
    EXPECT_EQ(h.count, 1u);
    ASSERT_TRUE(h.witness_power.has_value());
    EXPECT_EQ(*h.witness_power, 1);
    const auto i = example_i();
    for (int m = 1; m <= 6; ++m) {
        EXPECT_EQ(h0_length(power(i, m)).count, static_cast<std::uint64_t>(m * (m + 1))) << m;
    }
    const auto k = power(maximal_ideal(example()), 3);
    EXPECT_EQ(h0_length(k).count, colength(k).count);
    EXPECT_EQ(h0_length(make(plane(), {{1, 0}})).count, 0u);
}

TEST(Extrapolation, ExactOneOverMSequence)
{
    std::vector<Sample> samples;
    for (int m = 1; m <= 8; ++m) {
        samples.push_back({m, std::nullopt, make_rational(3) + make_rational(5, m)});
    }
    const auto est = extrapolate(samples, 2);
    EXPECT_EQ(est.limit, make_rational(3));
    EXPECT_EQ(est.residual, 0);
    EXPECT_EQ(est.model, EstimateModel::OneOverMFit);
    EXPECT_TRUE(passes_residual_gate(est));
}

TEST(Extrapolation, OscillatingSequenceFallsBackToTailAverage)
{
    std::vector<Sample> samples;
    for (int m = 1; m <= 8; ++m) {
        samples.push_back({m, std::nullopt, make_rational(m % 2 ? 1 : 3)});
    }
    const auto est = extrapolate(samples, 1);
    EXPECT_EQ(est.model, EstimateModel::TailAverage);
    EXPECT_EQ(est.limit, make_rational(2));
    EXPECT_EQ(normalized_length(6, 2, 2), make_rational(3));
    EXPECT_EQ(normalized_length(7, 3, 1), make_rational(7, 3));
}

TEST(Epsilon, ExamplePowersAreExactlyTwoPlusTwoOverM)
{
    const auto est = epsilon_sequence(power_filtration(example_i()), 10);
    ASSERT_EQ(est.samples.size(), 10u);
    for (const auto &s : est.samples) {
        EXPECT_EQ(s.value, make_rational(2 * (s.index + 1), s.index));
        EXPECT_EQ(*s.raw_length, static_cast<std::uint64_t>(s.index * (s.index + 1)));
    }
    EXPECT_EQ(est.limit, 2);
    EXPECT_EQ(est.d_used, 2u);
    EXPECT_TRUE(positivity_report(est));
}

TEST(Epsilon, PlaneIdealX2XYIsOne)
{
    const auto est = epsilon_sequence(power_filtration(make(plane(), {{2, 0}, {1, 1}})), 8);
    EXPECT_EQ(est.limit, 1);
    EXPECT_TRUE(positivity_report(est));
}

TEST(Epsilon, PrincipalIsZeroAndMaximalIsMultiplicity)
{
    const auto r = plane();
    const auto principal_est = epsilon_sequence(power_filtration(make(r, {{1, 0}})), 6);
    EXPECT_EQ(principal_est.limit, 0);
    EXPECT_FALSE(positivity_report(principal_est));
    // m^m is primary, so h0 is the colength m(m+1)/2 and the limit is e(m) = 1.
    const auto m_est = epsilon_sequence(power_filtration(maximal_ideal(r)), 6);
    EXPECT_EQ(m_est.limit, 1);
    EXPECT_TRUE(positivity_report(m_est));
    EXPECT_THROW(epsilon_sequence(power_filtration(maximal_ideal(r)), 3), PreconditionError);
}

TEST(Epsilon, ColonSequenceAgreesOnExample)
{
    const auto f = power_filtration(example_i());
    const auto a = epsilon_colon_sequence(f, maximal_ideal(example()), 8);
    const auto b = epsilon_sequence(f, 8);
    EXPECT_LE(distance(a.limit, b.limit), make_rational(5, 100) * b.limit);
    EXPECT_THROW(epsilon_colon_sequence(f, make(example(), {{1, 0}}), 6), KNotPrimary);
}

TEST(Amao, XOverX2XYIsOne)
{
    const auto r = plane();
    const auto a = make(r, {{1, 0}});
    const auto b = make(r, {{2, 0}, {1, 1}});
    const auto est = amao_pair_sequence(a, b, 8);
    EXPECT_EQ(est.limit, 1);
    const auto same = amao_pair_sequence(b, b, 6);
    EXPECT_EQ(same.limit, 0);
    for (const auto &s : same.samples) {
        EXPECT_EQ(s.value, 0);
    }
    EXPECT_THROW(amao_pair_sequence(a, make(r, {{2, 0}}), 6), PairNotCofinal);
    EXPECT_THROW(amao_pair_sequence(b, a, 6), PreconditionError);
}

TEST(Amao, SaturationPairMatchesEpsilon)
{
    const auto i = example_i();
    const auto est = amao_pair_sequence(saturate(i), i, 8);
    EXPECT_LE(distance(est.limit, 2), make_rational(1, 10));
}

TEST(VolumeTable, ExampleRows)
{
    const auto r = example();
    const auto table = volume_formula_table(example_i(), maximal_ideal(r), 4, 8);
    ASSERT_EQ(table.rows.size(), 4u);
    EXPECT_FALSE(positivity_report(table.rows[0].inner));
    for (int n = 2; n <= 4; ++n) {
        const Rational target = 2 * (n - 1) * (n - 1);
        EXPECT_LE(distance(table.rows[n - 1].inner.limit, target), make_rational(3, 100) * target) << n;
        EXPECT_EQ(table.rows[n - 1].ratio, table.rows[n - 1].inner.limit / (n * n));
        EXPECT_GE(table.rows[n - 1].ratio, table.rows[n - 2].ratio);
    }
    EXPECT_FALSE(table.outer.samples.front().raw_length.has_value());
    EXPECT_THROW(volume_formula_table(example_i(), maximal_ideal(r), 2, 8), PreconditionError);
}

TEST(Spread, SmallPlaneIdeals)
{
    const auto r = plane();
    const auto i = make(r, {{2, 0}, {1, 1}});
    EXPECT_EQ(analytic_spread(i).value, 2u);
    EXPECT_EQ(analytic_spread(colon(i, maximal_ideal(r))).value, 1u);
    EXPECT_EQ(analytic_spread(maximal_ideal(r)).value, 2u);
    EXPECT_EQ(analytic_spread(make(r, {{1, 0}})).value, 1u);
    EXPECT_EQ(analytic_spread(example_i()).value, 2u);
    EXPECT_EQ(analytic_spread(maximal_ideal(example())).value, 2u);
}

TEST(Spread, NonEquigeneratedIdealStaysBelowDimension)
{
    // x*m in k[x,y^2,y^3] has three generators in two degrees; the fiber cone is 2-dimensional.
    const auto r = example();
    const auto xm = product(make(r, {{1, 0}}), maximal_ideal(r));
    EXPECT_EQ(analytic_spread(xm).value, 2u);
    const auto p = AffineSemigroupRing::polynomial({"x", "y", "z"});
    EXPECT_EQ(analytic_spread(make(p, {{1, 0, 0}, {0, 2, 0}})).value, 2u);
    EXPECT_EQ(analytic_spread(maximal_ideal(p)).value, 3u);
}

TEST(Spread, Families)
{
    const auto r = plane();
    const auto x = make(r, {{1, 0}});
    const auto res = analytic_spread_family(custom_family(r, "x^m", [&](int m) { return power(x, m); }), 6);
    EXPECT_EQ(res.value, 1u);
    EXPECT_TRUE(res.stabilized);
    const auto f3 = colon_family(power_filtration(example_i()), maximal_ideal(example()), 3);
    EXPECT_EQ(analytic_spread_family(f3, 6).value, 2u);
}

TEST(Probe, PowersAreNoetherian)
{
    const auto rep = noetherian_probe(power_filtration(example_i()), 6);
    EXPECT_EQ(rep.verdict, NoetherianVerdict::ConsistentWithNoetherian);
    EXPECT_TRUE(rep.evidence.empty());
}

TEST(Probe, ColonFamilyHasNewGeneratorsInEveryDegree)
{
    const int n = 3;
    const auto f = colon_family(power_filtration(example_i()), maximal_ideal(example()), n);
    const auto rep = noetherian_probe(f, 6);
    EXPECT_EQ(rep.verdict, NoetherianVerdict::NonNoetherianEvidence);
    ASSERT_EQ(rep.evidence.size(), 5u);
    for (const auto &e : rep.evidence) {
        EXPECT_EQ(e.weight, 2 * e.m * n - e.m + 1);
        EXPECT_EQ(e.generator, (ExponentVector{2 * e.m * n - e.m + 1, 0}));
    }
}

TEST(Threads, ParallelRunsMatchSequential)
{
    const auto f = colon_family(power_filtration(example_i()), maximal_ideal(example()), 2);
    ComputeOptions par;
    par.threads = 4;
    const auto a = epsilon_sequence(f, 8);
    const auto b = epsilon_sequence(colon_family(power_filtration(example_i()), maximal_ideal(example()), 2), 8, par);
    ASSERT_EQ(a.samples.size(), b.samples.size());
    for (std::size_t k = 0; k < a.samples.size(); ++k) {
        EXPECT_EQ(a.samples[k].value, b.samples[k].value);
    }
    EXPECT_EQ(a.limit, b.limit);
    const auto pa = noetherian_probe(f, 6);
    const auto pb = noetherian_probe(f, 6, par);
    ASSERT_EQ(pa.evidence.size(), pb.evidence.size());
    for (std::size_t k = 0; k < pa.evidence.size(); ++k) {
        EXPECT_EQ(pa.evidence[k].generator, pb.evidence[k].generator);
    }
}
