#include <epsmult/random.hpp>

#include <algorithm>
#include <map>

#include <epsmult/errors.hpp>

namespace epsmult
{

namespace
{

Exponent uniform(std::mt19937_64 &rng, Exponent lo, Exponent hi)
{
    return std::uniform_int_distribution<Exponent>(lo, hi)(rng);
}

} // namespace

RingPtr random_ring(std::mt19937_64 &rng, std::size_t max_dim)
{
    static const std::vector<std::string> names = {"x", "y", "z"};
    const auto kind = uniform(rng, 0, 3);
    if (kind == 0 && max_dim >= 2) {
        return AffineSemigroupRing::semigroup({"x", "y"}, {{1, 0}, {0, 2}, {0, 3}});
    }
    if (kind == 1) {
        return AffineSemigroupRing::semigroup({"t"}, {{2}, {3}});
    }
    const auto d = static_cast<std::size_t>(uniform(rng, 1, static_cast<Exponent>(std::min<std::size_t>(max_dim, 3))));
    return AffineSemigroupRing::polynomial(std::vector<std::string>(names.begin(), names.begin() + d));
}

MonomialIdeal random_ideal(const RingPtr &ring, std::mt19937_64 &rng, int max_gens, Exponent max_weight)
{
    const auto pool = enumerate_below(*ring, ring->grading(), max_weight);
    std::vector<ExponentVector> candidates;
    for (const auto &p : pool) {
        if (!p.is_zero()) {
            candidates.push_back(p);
        }
    }
    if (candidates.empty()) {
        throw PreconditionError("no monomials below the requested weight");
    }
    std::vector<ExponentVector> gens;
    const auto count = uniform(rng, 1, max_gens);
    for (Exponent k = 0; k < count; ++k) {
        gens.push_back(candidates[static_cast<std::size_t>(uniform(rng, 0, static_cast<Exponent>(candidates.size()) - 1))]);
    }
    return MonomialIdeal::from_generators(ring, std::move(gens));
}

MonomialIdeal random_primary_ideal(const RingPtr &ring, std::mt19937_64 &rng, Exponent max_power)
{
    std::vector<ExponentVector> gens;
    for (const auto &s : ring->sgens()) {
        gens.push_back(s.scaled(uniform(rng, 1, max_power)));
    }
    auto extra = random_ideal(ring, rng, 2, ring->max_sgen_weight() * max_power);
    for (const auto &g : extra.generators()) {
        gens.push_back(g);
    }
    return MonomialIdeal::from_generators(ring, std::move(gens));
}

std::vector<IdentityResult> run_identity_suite(int count, std::uint64_t seed, const ComputeOptions &opts)
{
    std::mt19937_64 rng(seed);
    std::map<std::string, IdentityResult> results;
    auto record = [&](const std::string &name, bool ok) {
        auto &r = results[name];
        r.property = name;
        ++r.instances;
        r.failures += ok ? 0 : 1;
    };
    for (int k = 0; k < count; ++k) {
        const auto ring = random_ring(rng);
        const auto i = random_ideal(ring, rng);
        const auto j = random_ideal(ring, rng);
        const auto kk = random_primary_ideal(ring, rng);
        const auto q = colon(i, j, opts);
        record("(I:J)J in I", i.contains(product(q, j)));
        record("I in (I:J)", q.contains(i));
        const auto meet = intersect(i, j, opts);
        record("I cap J in I and J", i.contains(meet) && j.contains(meet));
        record("IJ in I cap J", meet.contains(product(i, j)));
        record("I + J contains I", sum(i, j).contains(i));
        const auto sat = saturate(i, opts);
        record("(I^sat : m) = I^sat", colon(sat, maximal_ideal(ring), opts) == sat && sat.contains(i));
        record("(I:K)^sat = I^sat", saturate(colon(i, kk, opts), opts) == sat);
    }
    std::vector<IdentityResult> out;
    for (auto &[name, r] : results) {
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace epsmult
