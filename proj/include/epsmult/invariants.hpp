#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <epsmult/filtration.hpp>
#include <epsmult/ideal.hpp>
#include <epsmult/rational.hpp>

namespace epsmult
{

// A length; finite == false means the quotient has infinite length and count
// is meaningless.
struct LengthValue {
    std::uint64_t count = 0;
    bool finite = true;
    // h0_length only: least k with I^sat * m^k inside I.
    std::optional<int> witness_power;
};

// lambda(R/I): number of monomials of S outside I, or infinite when I is not
// primary to the maximal ideal.
LengthValue colength(const MonomialIdeal &i, const ComputeOptions &opts = {});
// lambda(I^sat/I): number of monomials in I^sat \ I.
LengthValue h0_length(const MonomialIdeal &i, const ComputeOptions &opts = {});

enum class EstimateModel { TailAverage, OneOverMFit };
std::string to_string(EstimateModel model);

struct Sample {
    int index = 0;
    // Unset for derived sequences such as the outer volume ratios.
    std::optional<std::uint64_t> raw_length;
    Rational value;
};

struct MultiplicityEstimate {
    std::vector<Sample> samples;
    Rational limit;
    EstimateModel model = EstimateModel::OneOverMFit;
    Rational residual;
    std::size_t d_used = 1;
};

// d! * raw / m^d.
Rational normalized_length(std::uint64_t raw, int m, std::size_t d);

// Least-squares fit of v = L + c/m over the last ceil(N/2) samples. Falls back
// to the tail average when the fit residual exceeds the tail spread.
MultiplicityEstimate extrapolate(std::vector<Sample> samples, std::size_t d);

// residual <= gate * max(1, |limit|).
bool passes_residual_gate(const MultiplicityEstimate &est, const Rational &gate = make_rational(1, 20));

MultiplicityEstimate epsilon_sequence(const Filtration &filt, int m_max, const ComputeOptions &opts = {});
// Samples d! * h0_length((I_n : K)) / n^d. Throws KNotPrimary.
MultiplicityEstimate epsilon_colon_sequence(const Filtration &filt, const MonomialIdeal &k, int n_max,
                                            const ComputeOptions &opts = {});
// Samples d! * |A^m \ B^m| / m^d. Throws PairNotCofinal when A^m is not inside
// the saturation of B^m.
MultiplicityEstimate amao_pair_sequence(const MonomialIdeal &a, const MonomialIdeal &b, int m_max,
                                        const ComputeOptions &opts = {});

struct VolumeRow {
    int n = 0;
    MultiplicityEstimate inner;
    // inner.limit / n^d
    Rational ratio;
};

struct VolumeTable {
    std::vector<VolumeRow> rows;
    MultiplicityEstimate outer;
};

// Rows n = 1..n_max of the epsilon estimate of F(n) = {(I^{nm} : K^m)}, plus
// an extrapolation of the ratios.
VolumeTable volume_formula_table(const MonomialIdeal &i, const MonomialIdeal &k, int n_max, int m_max,
                                 const ComputeOptions &opts = {});

struct SpreadResult {
    std::size_t value = 0;
    bool stabilized = true;
};

// Dimension of the fiber cone of I, read off the cone spanned by (s, 0) for the
// semigroup generators and (g, 1) for the generators of I.
SpreadResult analytic_spread(const MonomialIdeal &i);
// Same with rows (g, m) for generators g of I_m, 1 <= m <= m_max. Stabilized
// when the value at m_max equals the value at ceil(m_max / 2).
SpreadResult analytic_spread_family(const Filtration &filt, int m_max);

enum class NoetherianVerdict { ConsistentWithNoetherian, NonNoetherianEvidence };
std::string to_string(NoetherianVerdict verdict);

// A minimal generator of I_m outside the sum of I_i I_{m-i}, of least weight.
struct NewGenerator {
    int m = 0;
    Exponent weight = 0;
    ExponentVector generator;
};

struct NoetherianReport {
    std::vector<NewGenerator> evidence;
    NoetherianVerdict verdict = NoetherianVerdict::ConsistentWithNoetherian;
};

NoetherianReport noetherian_probe(const Filtration &filt, int m_max, const ComputeOptions &opts = {});

// limit > threshold and every sample in the top half exceeds threshold.
bool positivity_report(const MultiplicityEstimate &est, const Rational &threshold = make_rational(1, 100));

} // namespace epsmult
