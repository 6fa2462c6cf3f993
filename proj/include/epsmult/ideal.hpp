#pragma once

#include <optional>
#include <string>
#include <vector>

#include <epsmult/exponent.hpp>
#include <epsmult/ring.hpp>

namespace epsmult
{

// Knobs for the windowed semigroup-ring algorithms and saturation.
struct ComputeOptions {
    // Window bound (in grading weight) for semigroup-ring colon and
    // intersection. Unset means a bound derived from the operands.
    std::optional<Exponent> window_bound;
    int saturation_cap = 64;
    // Worker threads for per-index sequence evaluation.
    unsigned threads = 1;
};

// A windowed result was recomputed at verified_at >= 2 * bound_used and did
// not change.
struct StabilityCertificate {
    Exponent bound_used = 0;
    Exponent verified_at = 0;
};

// A monomial ideal of k[S], stored as its minimal generating set in
// lexicographic order. No generator S-divides another. The zero ideal has no
// generators; the unit ideal is generated by the zero vector.
class MonomialIdeal
{
public:
    static MonomialIdeal zero(RingPtr ring);
    static MonomialIdeal unit(RingPtr ring);
    // Minimalizes raw generators; each must lie in S.
    static MonomialIdeal from_generators(RingPtr ring, std::vector<ExponentVector> raw_gens);

    const RingPtr &ring() const noexcept
    {
        return m_ring;
    }
    const std::vector<ExponentVector> &generators() const noexcept
    {
        return m_gens;
    }
    bool is_zero() const noexcept
    {
        return m_gens.empty();
    }
    bool is_unit() const noexcept
    {
        return m_gens.size() == 1 && m_gens.front().is_zero();
    }

    bool contains(const ExponentVector &a) const;
    // other is a subset of this ideal.
    bool contains(const MonomialIdeal &other) const;

    Exponent max_generator_weight() const;

    friend bool operator==(const MonomialIdeal &a, const MonomialIdeal &b);

private:
    MonomialIdeal(RingPtr ring, std::vector<ExponentVector> gens) : m_ring(std::move(ring)), m_gens(std::move(gens)) {}

    RingPtr m_ring;
    std::vector<ExponentVector> m_gens;

    friend MonomialIdeal minimalize(const RingPtr &ring, std::vector<ExponentVector> raw_gens);
};

// Drops every generator that is S-divisible by another one.
MonomialIdeal minimalize(const RingPtr &ring, std::vector<ExponentVector> raw_gens);

// The maximal ideal generated by all semigroup generators.
MonomialIdeal maximal_ideal(const RingPtr &ring);

bool membership(const MonomialIdeal &ideal, const ExponentVector &a);
bool equals(const MonomialIdeal &a, const MonomialIdeal &b);

MonomialIdeal sum(const MonomialIdeal &a, const MonomialIdeal &b);
MonomialIdeal product(const MonomialIdeal &a, const MonomialIdeal &b);
// power(I, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal &a, int n);
// The principal ideal x^e.
MonomialIdeal principal(const RingPtr &ring, const ExponentVector &e);

struct WindowedIdeal {
    MonomialIdeal ideal;
    // Unset when the result is exact (polynomial ring, trivial operands).
    std::optional<StabilityCertificate> certificate;
};

WindowedIdeal intersect_certified(const MonomialIdeal &a, const MonomialIdeal &b, const ComputeOptions &opts = {});
MonomialIdeal intersect(const MonomialIdeal &a, const MonomialIdeal &b, const ComputeOptions &opts = {});

// (I : J). J must be nonzero.
WindowedIdeal colon_certified(const MonomialIdeal &i, const MonomialIdeal &j, const ComputeOptions &opts = {});
MonomialIdeal colon(const MonomialIdeal &i, const MonomialIdeal &j, const ComputeOptions &opts = {});

// (I : J^t) by t successive colons.
MonomialIdeal colon_power(const MonomialIdeal &i, const MonomialIdeal &j, int t, const ComputeOptions &opts = {});

struct Saturation {
    MonomialIdeal ideal;
    // Smallest k with (I : J^k) = (I : J^(k+1)).
    int iterations = 0;
};

Saturation saturate_counted(const MonomialIdeal &i, const MonomialIdeal &j, const ComputeOptions &opts = {});
MonomialIdeal saturate(const MonomialIdeal &i, const MonomialIdeal &j, const ComputeOptions &opts = {});
// Saturation with respect to the maximal ideal.
MonomialIdeal saturate(const MonomialIdeal &i, const ComputeOptions &opts = {});

// Primary to the maximal ideal: proper and saturating to the unit ideal.
bool is_m_primary(const MonomialIdeal &k, const ComputeOptions &opts = {});

// "x^2*y" style text; "1" for the zero vector.
std::string monomial_to_string(const AffineSemigroupRing &ring, const ExponentVector &a);
// "ideal(x^2, x*y^2)".
std::string to_string(const MonomialIdeal &ideal);

} // namespace epsmult
