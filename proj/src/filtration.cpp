#include <epsmult/filtration.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include <epsmult/errors.hpp>

#include "window.hpp"

namespace epsmult
{

std::string to_string(FiltrationKind kind)
{
    switch (kind) {
        case FiltrationKind::Power:
            return "power";
        case FiltrationKind::DiscreteValued:
            return "discrete-valued";
        case FiltrationKind::ColonFamily:
            return "colon-family";
        case FiltrationKind::Sandwich:
            return "sandwich";
        case FiltrationKind::Explicit:
            return "explicit";
        case FiltrationKind::Custom:
            return "custom";
    }
    return "unknown";
}

std::string to_string(SandwichRule rule)
{
    switch (rule) {
        case SandwichRule::Lower:
            return "lower";
        case SandwichRule::Upper:
            return "upper";
        case SandwichRule::Midpoint:
            return "midpoint";
    }
    return "unknown";
}

struct Filtration::State {
    RingPtr ring;
    FiltrationKind kind;
    std::string label;
    bool graded;
    bool descending;
    Compute compute;
    std::mutex mutex;
    std::map<int, MonomialIdeal> memo;
};

Filtration::Filtration(RingPtr ring, FiltrationKind kind, std::string label, bool graded, bool descending,
                       Compute compute)
    : m_state(std::make_shared<State>())
{
    m_state->ring = std::move(ring);
    m_state->kind = kind;
    m_state->label = std::move(label);
    m_state->graded = graded;
    m_state->descending = descending;
    m_state->compute = std::move(compute);
}

const RingPtr &Filtration::ring() const noexcept
{
    return m_state->ring;
}

FiltrationKind Filtration::kind() const noexcept
{
    return m_state->kind;
}

const std::string &Filtration::label() const noexcept
{
    return m_state->label;
}

bool Filtration::asserts_graded() const noexcept
{
    return m_state->graded;
}

bool Filtration::asserts_descending() const noexcept
{
    return m_state->descending;
}

MonomialIdeal Filtration::ideal_at(int m) const
{
    if (m < 0) {
        throw PreconditionError("filtration index must be nonnegative");
    }
    if (m == 0) {
        return MonomialIdeal::unit(m_state->ring);
    }
    {
        std::lock_guard lock(m_state->mutex);
        if (auto it = m_state->memo.find(m); it != m_state->memo.end()) {
            return it->second;
        }
    }
    // Computed outside the lock; the compute function may recurse into ideal_at.
    auto value = m_state->compute(*this, m);
    std::lock_guard lock(m_state->mutex);
    return m_state->memo.try_emplace(m, std::move(value)).first->second;
}

// --- valuations -----------------------------------------------------------

MonomialIdeal valuation_ideal(const RingPtr &ring, std::span<const Exponent> w, Exponent t)
{
    const std::size_t d = ring->ambient_dim();
    if (w.size() != d) {
        throw PreconditionError("valuation weight has the wrong dimension");
    }
    if (std::any_of(w.begin(), w.end(), [](Exponent x) { return x <= 0; })) {
        throw PreconditionError("valuation weights must be positive");
    }
    if (t <= 0) {
        return MonomialIdeal::unit(ring);
    }
    const std::vector<Exponent> weights(w.begin(), w.end());
    const WeightGrading grading(weights);
    Exponent step = 0;
    for (const auto &s : ring->sgens()) {
        step = std::max(step, grading.weight(s));
    }
    // A minimal generator a has some a - s in S below threshold, so
    // t <= w.a < t + max_s w.s.
    const Exponent top = t + step - 1;
    const auto box = detail::weight_window(weights, top);
    auto table = detail::ideal_table(box, {ExponentVector(d)}, ring->sgens());
    box.for_each_point([&](std::size_t idx, const std::vector<Exponent> &p) {
        Exponent v = 0;
        for (std::size_t k = 0; k < d; ++k) {
            v += weights[k] * p[k];
        }
        if (v < t) {
            table[idx] = 0;
        }
    });
    return minimalize(ring, detail::table_minimal_elements(box, table, ring->sgens(), weights, top));
}

Exponent valuation_of_ideal(std::span<const Exponent> w, const MonomialIdeal &k)
{
    if (k.is_zero()) {
        throw PreconditionError("valuation of the zero ideal");
    }
    const WeightGrading grading(std::vector<Exponent>(w.begin(), w.end()));
    Exponent best = grading.weight(k.generators().front());
    for (const auto &g : k.generators()) {
        best = std::min(best, grading.weight(g));
    }
    return best;
}

// --- constructors ---------------------------------------------------------

Filtration power_filtration(const MonomialIdeal &base)
{
    if (base.is_zero() || base.is_unit()) {
        throw PreconditionError("power filtration needs a proper nonzero ideal");
    }
    return Filtration(base.ring(), FiltrationKind::Power, "powers(" + to_string(base) + ")", true, true,
                      [base](const Filtration &self, int m) {
                          return m == 1 ? base : product(self.ideal_at(m - 1), base);
                      });
}

Filtration discrete_valued_filtration(const RingPtr &ring, std::vector<WeightValuation> vals,
                                      const ComputeOptions &opts)
{
    if (vals.empty()) {
        throw PreconditionError("a discrete valued filtration needs at least one valuation");
    }
    std::string label = "valfilt(";
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const auto &v = vals[i];
        if (v.weights.size() != ring->ambient_dim()) {
            throw PreconditionError("valuation weight has the wrong dimension");
        }
        if (std::any_of(v.weights.begin(), v.weights.end(), [](Exponent x) { return x <= 0; })) {
            throw PreconditionError("valuation weights must be positive");
        }
        if (v.coefficient <= 0) {
            throw PreconditionError("valuation coefficients must be positive");
        }
        label += (i ? ", " : "") + to_string(ExponentVector(v.weights)) + ":" + to_string(v.coefficient);
    }
    label += ")";
    return Filtration(ring, FiltrationKind::DiscreteValued, label, true, true,
                      [ring, vals = std::move(vals), opts](const Filtration &, int m) {
                          std::optional<MonomialIdeal> acc;
                          for (const auto &v : vals) {
                              const Exponent t = ceil_to_int(v.coefficient * m);
                              auto part = valuation_ideal(ring, v.weights, t);
                              acc = acc ? intersect(*acc, part, opts) : std::move(part);
                          }
                          return *acc;
                      });
}

Filtration colon_family(const Filtration &base, const MonomialIdeal &k, int n, const ComputeOptions &opts)
{
    if (n < 1) {
        throw PreconditionError("colon family index n must be positive");
    }
    if (!k.ring()->same_as(*base.ring())) {
        throw RingMismatch("colon_family");
    }
    if (!is_m_primary(k, opts)) {
        throw KNotPrimary();
    }
    const std::string label = "colonfam(" + base.label() + ", " + to_string(k) + ", n=" + std::to_string(n) + ")";
    return Filtration(base.ring(), FiltrationKind::ColonFamily, label, base.asserts_graded(), false,
                      [base, k, n, opts](const Filtration &, int m) {
                          return colon_power(base.ideal_at(n * m), k, m, opts);
                      });
}

Filtration sandwich_family(const MonomialIdeal &i, const MonomialIdeal &k, SandwichRule rule, int extra,
                           const ComputeOptions &opts)
{
    if (!i.ring()->same_as(*k.ring())) {
        throw RingMismatch("sandwich_family");
    }
    if (!is_m_primary(k, opts)) {
        throw KNotPrimary();
    }
    if (extra < 0) {
        throw PreconditionError("midpoint generator count must be nonnegative");
    }
    const std::string label = "sandwich(" + to_string(i) + ", " + to_string(k) + ", rule=" + to_string(rule) + ")";
    const bool graded = rule == SandwichRule::Lower;
    return Filtration(i.ring(), FiltrationKind::Sandwich, label, graded, false,
                      [i, k, rule, extra, opts](const Filtration &, int n) {
                          auto lower = power(i, n);
                          if (rule == SandwichRule::Lower) {
                              return lower;
                          }
                          auto upper = colon(lower, k, opts);
                          if (rule == SandwichRule::Upper) {
                              return upper;
                          }
                          std::vector<ExponentVector> gens = lower.generators();
                          int added = 0;
                          for (const auto &g : upper.generators()) {
                              if (added == extra) {
                                  break;
                              }
                              if (!lower.contains(g)) {
                                  gens.push_back(g);
                                  ++added;
                              }
                          }
                          return minimalize(i.ring(), std::move(gens));
                      });
}

Filtration explicit_family(const RingPtr &ring, std::vector<MonomialIdeal> ideals)
{
    if (ideals.empty() || !ideals.front().is_unit()) {
        throw PreconditionError("an explicit family must start with the unit ideal");
    }
    for (const auto &I : ideals) {
        if (!I.ring()->same_as(*ring)) {
            throw RingMismatch("explicit_family");
        }
    }
    return Filtration(ring, FiltrationKind::Explicit, "explicit", false, false,
                      [ideals = std::move(ideals)](const Filtration &, int m) {
                          if (static_cast<std::size_t>(m) >= ideals.size()) {
                              throw PreconditionError("explicit family has no member at index " + std::to_string(m));
                          }
                          return ideals[static_cast<std::size_t>(m)];
                      });
}

Filtration custom_family(const RingPtr &ring, std::string label, std::function<MonomialIdeal(int)> fn, bool graded,
                         bool descending)
{
    return Filtration(ring, FiltrationKind::Custom, std::move(label), graded, descending,
                      [fn = std::move(fn)](const Filtration &, int m) { return fn(m); });
}

// --- checkers -------------------------------------------------------------

ArReport check_ar(const Filtration &filt, int r, int m_max, const ComputeOptions &opts)
{
    if (r < 1 || m_max < 1) {
        throw PreconditionError("check_ar needs r >= 1 and m_max >= 1");
    }
    ArReport report;
    report.r_tested = r;
    report.m_range = {1, m_max};
    const auto max_ideal = maximal_ideal(filt.ring());
    for (int m = 1; m <= m_max; ++m) {
        const auto im = filt.ideal_at(m);
        const auto deep = power(max_ideal, r * m);
        const auto lhs = intersect(saturate(im, opts), deep, opts);
        const auto rhs = intersect(im, deep, opts);
        if (lhs == rhs) {
            continue;
        }
        report.holds = false;
        for (const auto &g : lhs.generators()) {
            if (!rhs.contains(g)) {
                report.first_failure = ArWitness{m, g};
                break;
            }
        }
        return report;
    }
    return report;
}

std::optional<int> find_min_ar(const Filtration &filt, int r_max, int m_max, const ComputeOptions &opts)
{
    for (int r = 1; r <= r_max; ++r) {
        if (check_ar(filt, r, m_max, opts).holds) {
            return r;
        }
    }
    return std::nullopt;
}

GradingReport check_weakly_graded(const Filtration &filt, const ExponentVector &c, IndexRange range)
{
    if (!filt.ring()->contains(c)) {
        throw PreconditionError("the multiplier " + to_string(c) + " is not a monomial of the ring");
    }
    if (range.lo < 0 || range.hi < range.lo) {
        throw PreconditionError("invalid index range");
    }
    for (int m = range.lo; m <= range.hi; ++m) {
        const auto im = filt.ideal_at(m);
        for (int n = range.lo; n <= range.hi; ++n) {
            const auto in = filt.ideal_at(n);
            const auto target = filt.ideal_at(m + n);
            for (const auto &g : im.generators()) {
                for (const auto &h : in.generators()) {
                    if (!target.contains(c + g + h)) {
                        return {false, GradingViolation{m, n, g, h}};
                    }
                }
            }
        }
    }
    return {};
}

GradingReport check_graded(const Filtration &filt, IndexRange range)
{
    return check_weakly_graded(filt, ExponentVector(filt.ring()->ambient_dim()), range);
}

} // namespace epsmult
