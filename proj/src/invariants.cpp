#include <epsmult/invariants.hpp>

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include <epsmult/errors.hpp>

#include "cone.hpp"
#include "parallel.hpp"

namespace epsmult
{

namespace
{

using MonomialSet = std::unordered_set<ExponentVector, ExponentVectorHash>;

// Monomials reachable from `starts` by adding semigroup generators without
// entering `stop`. Every start must lie outside stop.
MonomialSet explore_outside(const RingPtr &ring, const std::vector<ExponentVector> &starts,
                            const MonomialIdeal &stop)
{
    MonomialSet seen(starts.begin(), starts.end());
    std::deque<ExponentVector> queue(starts.begin(), starts.end());
    while (!queue.empty()) {
        const auto p = std::move(queue.front());
        queue.pop_front();
        for (const auto &s : ring->sgens()) {
            auto q = p + s;
            if (!seen.contains(q) && !stop.contains(q)) {
                seen.insert(q);
                queue.push_back(std::move(q));
            }
        }
    }
    return seen;
}

BigInt factorial(std::size_t d)
{
    BigInt f = 1;
    for (std::size_t k = 2; k <= d; ++k) {
        f *= k;
    }
    return f;
}

Rational magnitude(const Rational &q)
{
    return q < 0 ? Rational(-q) : q;
}

template <typename RawLength>
MultiplicityEstimate sample_sequence(int hi, std::size_t d, unsigned threads, RawLength &&raw)
{
    std::vector<Sample> samples(static_cast<std::size_t>(hi));
    detail::parallel_for(1, hi, threads, [&](int m) {
        const std::uint64_t count = raw(m);
        samples[static_cast<std::size_t>(m - 1)] = Sample{m, count, normalized_length(count, m, d)};
    });
    return extrapolate(std::move(samples), d);
}

} // namespace

LengthValue colength(const MonomialIdeal &i, const ComputeOptions &opts)
{
    if (i.is_unit()) {
        return {0, true, std::nullopt};
    }
    if (!is_m_primary(i, opts)) {
        return {0, false, std::nullopt};
    }
    const auto seen = explore_outside(i.ring(), {ExponentVector(i.ring()->ambient_dim())}, i);
    return {seen.size(), true, std::nullopt};
}

LengthValue h0_length(const MonomialIdeal &i, const ComputeOptions &opts)
{
    if (i.is_zero()) {
        return {0, true, 0};
    }
    const auto sat = saturate(i, opts);
    std::vector<ExponentVector> starts;
    for (const auto &g : sat.generators()) {
        if (!i.contains(g)) {
            starts.push_back(g);
        }
    }
    if (starts.empty()) {
        return {0, true, 0};
    }
    const auto seen = explore_outside(i.ring(), starts, i);

    // Longest chain of generator steps inside I^sat \ I; weights strictly
    // increase along steps, so processing by weight is a topological order.
    const auto &grading = i.ring()->grading();
    std::vector<ExponentVector> order(seen.begin(), seen.end());
    std::sort(order.begin(), order.end(), [&](const auto &a, const auto &b) {
        const auto wa = grading.weight(a);
        const auto wb = grading.weight(b);
        return wa != wb ? wa < wb : a < b;
    });
    std::unordered_map<ExponentVector, int, ExponentVectorHash> depth;
    int longest = 0;
    for (const auto &p : order) {
        const int dp = depth[p];
        longest = std::max(longest, dp);
        for (const auto &s : i.ring()->sgens()) {
            auto q = p + s;
            if (seen.contains(q)) {
                auto &dq = depth[q];
                dq = std::max(dq, dp + 1);
            }
        }
    }
    return {seen.size(), true, longest + 1};
}

std::string to_string(EstimateModel model)
{
    return model == EstimateModel::TailAverage ? "tail-average" : "one-over-m-fit";
}

Rational normalized_length(std::uint64_t raw, int m, std::size_t d)
{
    BigInt denom = 1;
    for (std::size_t k = 0; k < d; ++k) {
        denom *= m;
    }
    return Rational(factorial(d) * BigInt(raw), denom);
}

MultiplicityEstimate extrapolate(std::vector<Sample> samples, std::size_t d)
{
    if (samples.empty()) {
        throw PreconditionError("cannot extrapolate an empty sequence");
    }
    MultiplicityEstimate est;
    est.d_used = d;
    const std::size_t k = (samples.size() + 1) / 2;
    const auto tail = std::span(samples).last(k);

    Rational mean = 0;
    for (const auto &s : tail) {
        mean += s.value;
    }
    mean /= static_cast<long>(k);
    Rational spread = 0;
    for (const auto &s : tail) {
        spread = std::max(spread, magnitude(s.value - mean));
    }

    Rational su = 0, suu = 0, sv = 0, suv = 0;
    for (const auto &s : tail) {
        const Rational u(1, s.index);
        su += u;
        suu += u * u;
        sv += s.value;
        suv += u * s.value;
    }
    const Rational kk = static_cast<long>(k);
    const Rational det = kk * suu - su * su;
    Rational c = 0;
    if (det != 0) {
        c = (kk * suv - su * sv) / det;
    }
    const Rational limit = (sv - c * su) / kk;
    Rational residual = 0;
    for (const auto &s : tail) {
        residual = std::max(residual, magnitude(s.value - limit - c * Rational(1, s.index)));
    }

    if (residual > spread) {
        est.limit = mean;
        est.model = EstimateModel::TailAverage;
        est.residual = spread;
    } else {
        est.limit = limit;
        est.model = EstimateModel::OneOverMFit;
        est.residual = residual;
    }
    est.samples = std::move(samples);
    return est;
}

bool passes_residual_gate(const MultiplicityEstimate &est, const Rational &gate)
{
    return est.residual <= gate * std::max(Rational(1), magnitude(est.limit));
}

MultiplicityEstimate epsilon_sequence(const Filtration &filt, int m_max, const ComputeOptions &opts)
{
    if (m_max < 4) {
        throw PreconditionError("epsilon_sequence needs m_max >= 4");
    }
    return sample_sequence(m_max, filt.ring()->krull_dim(), opts.threads,
                           [&](int m) { return h0_length(filt.ideal_at(m), opts).count; });
}

MultiplicityEstimate epsilon_colon_sequence(const Filtration &filt, const MonomialIdeal &k, int n_max,
                                            const ComputeOptions &opts)
{
    if (n_max < 4) {
        throw PreconditionError("epsilon_colon_sequence needs n_max >= 4");
    }
    if (!k.ring()->same_as(*filt.ring())) {
        throw RingMismatch("epsilon_colon_sequence");
    }
    if (!is_m_primary(k, opts)) {
        throw KNotPrimary();
    }
    return sample_sequence(n_max, filt.ring()->krull_dim(), opts.threads,
                           [&](int n) { return h0_length(colon(filt.ideal_at(n), k, opts), opts).count; });
}

MultiplicityEstimate amao_pair_sequence(const MonomialIdeal &a, const MonomialIdeal &b, int m_max,
                                        const ComputeOptions &opts)
{
    if (m_max < 4) {
        throw PreconditionError("amao_pair_sequence needs m_max >= 4");
    }
    if (!a.ring()->same_as(*b.ring())) {
        throw RingMismatch("amao_pair_sequence");
    }
    if (!a.contains(b)) {
        throw PreconditionError("amao_pair_sequence needs B inside A");
    }
    const auto ring = a.ring();
    return sample_sequence(m_max, ring->krull_dim(), opts.threads, [&](int m) -> std::uint64_t {
        const auto am = power(a, m);
        const auto bm = power(b, m);
        if (!saturate(bm, opts).contains(am)) {
            throw PairNotCofinal(m);
        }
        std::vector<ExponentVector> starts;
        for (const auto &g : am.generators()) {
            if (!bm.contains(g)) {
                starts.push_back(g);
            }
        }
        return explore_outside(ring, starts, bm).size();
    });
}

VolumeTable volume_formula_table(const MonomialIdeal &i, const MonomialIdeal &k, int n_max, int m_max,
                                 const ComputeOptions &opts)
{
    if (n_max < 3 || m_max < 4) {
        throw PreconditionError("volume_formula_table needs n_max >= 3 and m_max >= 4");
    }
    const auto base = power_filtration(i);
    const std::size_t d = i.ring()->krull_dim();
    VolumeTable table;
    std::vector<Sample> ratios;
    for (int n = 1; n <= n_max; ++n) {
        VolumeRow row;
        row.n = n;
        row.inner = epsilon_sequence(colon_family(base, k, n, opts), m_max, opts);
        BigInt nd = 1;
        for (std::size_t j = 0; j < d; ++j) {
            nd *= n;
        }
        row.ratio = row.inner.limit / Rational(nd);
        ratios.push_back(Sample{n, std::nullopt, row.ratio});
        table.rows.push_back(std::move(row));
    }
    table.outer = extrapolate(std::move(ratios), d);
    return table;
}

SpreadResult analytic_spread(const MonomialIdeal &i)
{
    if (i.is_zero() || i.is_unit()) {
        throw PreconditionError("analytic_spread needs a proper nonzero ideal");
    }
    const auto &ring = *i.ring();
    std::vector<std::vector<Exponent>> base;
    for (const auto &s : ring.sgens()) {
        std::vector<Exponent> row(s.begin(), s.end());
        row.push_back(0);
        base.push_back(std::move(row));
    }
    std::vector<std::vector<Exponent>> rows;
    for (const auto &g : i.generators()) {
        std::vector<Exponent> row(g.begin(), g.end());
        row.push_back(1);
        rows.push_back(std::move(row));
    }
    return {detail::max_face_dimension_avoiding(base, rows), true};
}

SpreadResult analytic_spread_family(const Filtration &filt, int m_max)
{
    if (m_max < 1) {
        throw PreconditionError("analytic_spread_family needs m_max >= 1");
    }
    const auto &ring = *filt.ring();
    std::vector<std::vector<Exponent>> base;
    for (const auto &s : ring.sgens()) {
        std::vector<Exponent> row(s.begin(), s.end());
        row.push_back(0);
        base.push_back(std::move(row));
    }
    auto value_up_to = [&](int top) {
        std::vector<std::vector<Exponent>> rows;
        for (int m = 1; m <= top; ++m) {
            const auto im = filt.ideal_at(m);
            for (const auto &g : im.generators()) {
                std::vector<Exponent> row(g.begin(), g.end());
                row.push_back(m);
                rows.push_back(std::move(row));
            }
        }
        return detail::max_face_dimension_avoiding(base, rows);
    };
    const std::size_t full = value_up_to(m_max);
    const std::size_t half = value_up_to((m_max + 1) / 2);
    return {full, full == half};
}

std::string to_string(NoetherianVerdict verdict)
{
    return verdict == NoetherianVerdict::NonNoetherianEvidence ? "non-noetherian-evidence"
                                                               : "consistent-with-noetherian";
}

NoetherianReport noetherian_probe(const Filtration &filt, int m_max, const ComputeOptions &opts)
{
    if (m_max < 4) {
        throw PreconditionError("noetherian_probe needs m_max >= 4");
    }
    const auto &grading = filt.ring()->grading();
    std::vector<std::optional<NewGenerator>> found(static_cast<std::size_t>(m_max + 1));
    detail::parallel_for(2, m_max, opts.threads, [&](int m) {
        auto lower = MonomialIdeal::zero(filt.ring());
        for (int i = 1; i <= m / 2; ++i) {
            lower = sum(lower, product(filt.ideal_at(i), filt.ideal_at(m - i)));
        }
        std::optional<NewGenerator> best;
        const auto im = filt.ideal_at(m);
        for (const auto &g : im.generators()) {
            if (lower.contains(g)) {
                continue;
            }
            const auto w = grading.weight(g);
            if (!best || w < best->weight) {
                best = NewGenerator{m, w, g};
            }
        }
        found[static_cast<std::size_t>(m)] = std::move(best);
    });
    NoetherianReport report;
    bool persistent = true;
    for (int m = 2; m <= m_max; ++m) {
        const auto &entry = found[static_cast<std::size_t>(m)];
        if (entry) {
            report.evidence.push_back(*entry);
        } else if (2 * m > m_max) {
            persistent = false;
        }
    }
    report.verdict = persistent ? NoetherianVerdict::NonNoetherianEvidence
                                : NoetherianVerdict::ConsistentWithNoetherian;
    return report;
}

bool positivity_report(const MultiplicityEstimate &est, const Rational &threshold)
{
    if (est.limit <= threshold) {
        return false;
    }
    const std::size_t k = (est.samples.size() + 1) / 2;
    return std::all_of(est.samples.end() - static_cast<std::ptrdiff_t>(k), est.samples.end(),
                       [&](const Sample &s) { return s.value > threshold; });
}

} // namespace epsmult
