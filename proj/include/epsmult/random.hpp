#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <epsmult/ideal.hpp>

namespace epsmult
{

// Small random fixtures for property checks. Rings are polynomial rings of
// dimension 1 to max_dim or one of a few fixed semigroup rings.
RingPtr random_ring(std::mt19937_64 &rng, std::size_t max_dim = 3);
// 1 to max_gens random generators of weight <= max_weight (at least 1).
MonomialIdeal random_ideal(const RingPtr &ring, std::mt19937_64 &rng, int max_gens = 3, Exponent max_weight = 6);
// A random ideal primary to the maximal ideal: a power of every semigroup
// generator plus a few random monomials.
MonomialIdeal random_primary_ideal(const RingPtr &ring, std::mt19937_64 &rng, Exponent max_power = 3);

struct IdentityResult {
    std::string property;
    int instances = 0;
    int failures = 0;
};

// Checks algebraic identities that need no oracle: (I:J)J in I, I J in I∩J,
// (I^sat : m) = I^sat, (I:K)^sat = I^sat, and similar, on `count` instances.
std::vector<IdentityResult> run_identity_suite(int count, std::uint64_t seed, const ComputeOptions &opts = {});

} // namespace epsmult
