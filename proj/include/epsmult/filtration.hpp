#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <epsmult/ideal.hpp>
#include <epsmult/rational.hpp>

namespace epsmult
{

// nu_w(x^a) = w . a, used with a positive rational coefficient a_i in
// I_m = intersection of I(nu_i)_{ceil(m a_i)}.
struct WeightValuation {
    std::vector<Exponent> weights;
    Rational coefficient;
};

enum class FiltrationKind { Power, DiscreteValued, ColonFamily, Sandwich, Explicit, Custom };

// How the sandwich family picks I^n <= J_n <= (I^n : K).
enum class SandwichRule { Lower, Upper, Midpoint };

std::string to_string(FiltrationKind kind);
std::string to_string(SandwichRule rule);

// An indexed family m -> I_m of monomial ideals with I_0 = R.
//
// Filtration is a cheap handle; copies share one memo table. ideal_at may be
// called from several threads. Two threads can race to compute the same index,
// but both store equal values.
class Filtration
{
public:
    using Compute = std::function<MonomialIdeal(const Filtration &self, int m)>;

    Filtration(RingPtr ring, FiltrationKind kind, std::string label, bool graded, bool descending, Compute compute);

    const RingPtr &ring() const noexcept;
    FiltrationKind kind() const noexcept;
    const std::string &label() const noexcept;
    // The kind guarantees I_m I_n <= I_{m+n}.
    bool asserts_graded() const noexcept;
    // The kind guarantees I_{m+1} <= I_m.
    bool asserts_descending() const noexcept;

    MonomialIdeal ideal_at(int m) const;

private:
    struct State;
    std::shared_ptr<State> m_state;
};

// I(nu_w)_t: the monomials of S with w . a >= t.
MonomialIdeal valuation_ideal(const RingPtr &ring, std::span<const Exponent> w, Exponent t);
// nu_w(K) = min over generators of w . g.
Exponent valuation_of_ideal(std::span<const Exponent> w, const MonomialIdeal &k);

Filtration power_filtration(const MonomialIdeal &base);
Filtration discrete_valued_filtration(const RingPtr &ring, std::vector<WeightValuation> vals,
                                      const ComputeOptions &opts = {});
// F(n)_m = (I_{nm} : K^m). Throws KNotPrimary.
Filtration colon_family(const Filtration &base, const MonomialIdeal &k, int n, const ComputeOptions &opts = {});
// J_n for the given rule; Midpoint adds the first `extra` generators of
// (I^n : K) not in I^n, in lexicographic order.
Filtration sandwich_family(const MonomialIdeal &i, const MonomialIdeal &k, SandwichRule rule, int extra = 1,
                           const ComputeOptions &opts = {});
// ideals[m] for m >= 1 (ideals[0] must be the unit ideal); out of range throws.
Filtration explicit_family(const RingPtr &ring, std::vector<MonomialIdeal> ideals);
Filtration custom_family(const RingPtr &ring, std::string label, std::function<MonomialIdeal(int)> fn,
                         bool graded = false, bool descending = false);

struct IndexRange {
    int lo = 1;
    int hi = 1;
};

struct ArWitness {
    int m = 0;
    ExponentVector witness;
};

struct ArReport {
    int r_tested = 0;
    IndexRange m_range;
    bool holds = true;
    std::optional<ArWitness> first_failure;
};

// Checks I_m^sat ∩ m^{rm} = I_m ∩ m^{rm} for 1 <= m <= m_max only.
ArReport check_ar(const Filtration &filt, int r, int m_max, const ComputeOptions &opts = {});
std::optional<int> find_min_ar(const Filtration &filt, int r_max, int m_max, const ComputeOptions &opts = {});

struct GradingViolation {
    int m = 0;
    int n = 0;
    ExponentVector g;
    ExponentVector h;
};

struct GradingReport {
    bool holds = true;
    std::optional<GradingViolation> first_violation;
};

// Checks c + g + h in I_{m+n} for generators g of I_m, h of I_n, with m and n
// ranging over the given interval.
GradingReport check_weakly_graded(const Filtration &filt, const ExponentVector &c, IndexRange range);
// check_weakly_graded with c = 0.
GradingReport check_graded(const Filtration &filt, IndexRange range);

} // namespace epsmult
