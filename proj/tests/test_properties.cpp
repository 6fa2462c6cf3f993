#include <gtest/gtest.h>

#include <random>

#include <epsmult/invariants.hpp>
#include <epsmult/random.hpp>

#include "oracle.hpp"

using namespace epsmult;

TEST(Oracle, RandomOperationsMatchPointwiseDefinitions)
{
    std::mt19937_64 rng(20261015);
    for (int k = 0; k < 60; ++k) {
        const auto ring = random_ring(rng);
        const auto i = random_ideal(ring, rng);
        const auto j = random_ideal(ring, rng);
        const auto bad = oracle::disagreeing_ops(i, j, 10);
        EXPECT_TRUE(bad.empty()) << "instance " << k << ": " << to_string(i) << " / " << to_string(j) << " fails "
                                 << (bad.empty() ? "" : bad.front());
    }
}

TEST(Oracle, RandomColengthsMatchCounting)
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 30; ++k) {
        const auto ring = random_ring(rng, 2);
        const auto q = random_primary_ideal(ring, rng);
        oracle::Semigroup s(*ring);
        EXPECT_EQ(static_cast<long>(colength(q).count), oracle::count_outside(s, oracle::gens_of(q), 40))
            << to_string(q);
    }
}

TEST(Identities, LibrarySuiteHasNoFailures)
{
    for (const auto &r : run_identity_suite(40, 5)) {
        EXPECT_GT(r.instances, 0) << r.property;
        EXPECT_EQ(r.failures, 0) << r.property;
    }
}

TEST(Identities, SaturationOfColonByPrimaryIdeal)
{
    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; ++k) {
        const auto ring = random_ring(rng);
        const auto i = random_ideal(ring, rng);
        const auto q = random_primary_ideal(ring, rng);
        EXPECT_EQ(saturate(colon(i, q)), saturate(i)) << to_string(i) << " : " << to_string(q);
    }
}

TEST(Identities, ColonAdjunction)
{
    // (I : JK) = ((I : J) : K) and (I : J) J is inside I.
    std::mt19937_64 rng(9);
    for (int k = 0; k < 30; ++k) {
        const auto ring = random_ring(rng);
        const auto i = random_ideal(ring, rng);
        const auto j = random_ideal(ring, rng, 2, 3);
        const auto l = random_ideal(ring, rng, 2, 3);
        EXPECT_EQ(colon(i, product(j, l)), colon(colon(i, j), l));
        EXPECT_TRUE(i.contains(product(colon(i, j), j)));
        EXPECT_TRUE(intersect(i, j).contains(product(i, j)));
        EXPECT_EQ(intersect(i, j), intersect(j, i));
    }
}
