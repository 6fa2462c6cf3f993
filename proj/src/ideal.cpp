#include <epsmult/ideal.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

#include <epsmult/errors.hpp>

#include "window.hpp"

namespace epsmult
{

namespace
{

void require_same_ring(const MonomialIdeal &a, const MonomialIdeal &b, const char *op)
{
    if (!a.ring()->same_as(*b.ring())) {
        throw RingMismatch(op);
    }
}

bool divides_in(const AffineSemigroupRing &ring, const ExponentVector &a, const ExponentVector &b)
{
    if (ring.is_polynomial()) {
        return componentwise_le(a, b);
    }
    return s_divides(ring, a, b);
}

// Default window for semigroup-ring colon/intersection: the operand weight
// plus slack for gaps of S.
Exponent default_bound(const AffineSemigroupRing &ring, Exponent operand_weight)
{
    return operand_weight + 2 * ring.max_sgen_weight();
}

std::vector<ExponentVector> windowed_intersection(const MonomialIdeal &a, const MonomialIdeal &b, Exponent bound)
{
    const auto &ring = *a.ring();
    const auto &weights = ring.grading().weights();
    const auto box = detail::weight_window(weights, bound);
    auto table = detail::ideal_table(box, a.generators(), ring.sgens());
    const auto other = detail::ideal_table(box, b.generators(), ring.sgens());
    for (std::size_t i = 0; i < table.size(); ++i) {
        table[i] = table[i] && other[i];
    }
    return detail::table_minimal_elements(box, table, ring.sgens(), weights, bound);
}

std::vector<ExponentVector> windowed_colon(const MonomialIdeal &i, const MonomialIdeal &j, Exponent bound)
{
    const auto &ring = *i.ring();
    const auto &weights = ring.grading().weights();
    const std::size_t d = ring.ambient_dim();

    std::vector<Exponent> pad(d, 0);
    for (const auto &g : j.generators()) {
        for (std::size_t k = 0; k < d; ++k) {
            pad[k] = std::max(pad[k], g[k]);
        }
    }
    const auto outer = detail::weight_window(weights, bound, pad);
    const auto in_i = detail::ideal_table(outer, i.generators(), ring.sgens());
    std::vector<std::ptrdiff_t> shifts;
    for (const auto &g : j.generators()) {
        shifts.push_back(outer.offset(g));
    }

    const auto window = detail::weight_window(weights, bound);
    const auto in_s = detail::ideal_table(window, {ExponentVector(d)}, ring.sgens());
    detail::Bitmap result(window.size(), 0);
    window.for_each_point([&](std::size_t idx, const std::vector<Exponent> &p) {
        if (!in_s[idx]) {
            return;
        }
        Exponent w = 0;
        std::size_t base = 0;
        std::size_t stride = 1;
        for (std::size_t k = d; k-- > 0;) {
            w += weights[k] * p[k];
            base += static_cast<std::size_t>(p[k]) * stride;
            stride *= static_cast<std::size_t>(outer.extent()[k] + 1);
        }
        if (w > bound) {
            return;
        }
        for (auto s : shifts) {
            if (!in_i[base + static_cast<std::size_t>(s)]) {
                return;
            }
        }
        result[idx] = 1;
    });
    return detail::table_minimal_elements(window, result, ring.sgens(), weights, bound);
}

template <typename Compute>
WindowedIdeal certified(const RingPtr &ring, const char *op, Exponent bound, Compute &&compute)
{
    auto first = compute(bound);
    const Exponent doubled = 2 * std::max<Exponent>(bound, 1);
    auto second = compute(doubled);
    // Both callers have nonzero operands in a domain, so an empty answer only
    // means the window missed every generator.
    if (first != second || first.empty()) {
        throw StabilityFailure(op, bound, doubled);
    }
    return {minimalize(ring, std::move(first)), StabilityCertificate{bound, doubled}};
}

std::vector<ExponentVector> poly_intersection(const MonomialIdeal &a, const MonomialIdeal &b)
{
    std::vector<ExponentVector> raw;
    raw.reserve(a.generators().size() * b.generators().size());
    for (const auto &g : a.generators()) {
        for (const auto &h : b.generators()) {
            raw.push_back(componentwise_max(g, h));
        }
    }
    return raw;
}

} // namespace

// --- MonomialIdeal --------------------------------------------------------

MonomialIdeal MonomialIdeal::zero(RingPtr ring)
{
    return MonomialIdeal(std::move(ring), {});
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring)
{
    const std::size_t d = ring->ambient_dim();
    return MonomialIdeal(std::move(ring), {ExponentVector(d)});
}

MonomialIdeal MonomialIdeal::from_generators(RingPtr ring, std::vector<ExponentVector> raw_gens)
{
    return minimalize(ring, std::move(raw_gens));
}

bool MonomialIdeal::contains(const ExponentVector &a) const
{
    for (const auto &g : m_gens) {
        if (divides_in(*m_ring, g, a)) {
            return true;
        }
    }
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal &other) const
{
    require_same_ring(*this, other, "containment");
    return std::all_of(other.m_gens.begin(), other.m_gens.end(), [&](const auto &g) { return contains(g); });
}

Exponent MonomialIdeal::max_generator_weight() const
{
    Exponent w = 0;
    for (const auto &g : m_gens) {
        w = std::max(w, m_ring->grading().weight(g));
    }
    return w;
}

bool operator==(const MonomialIdeal &a, const MonomialIdeal &b)
{
    return a.m_ring->same_as(*b.m_ring) && a.m_gens == b.m_gens;
}

MonomialIdeal minimalize(const RingPtr &ring, std::vector<ExponentVector> raw_gens)
{
    const auto &grading = ring->grading();
    for (const auto &g : raw_gens) {
        if (g.size() != ring->ambient_dim()) {
            throw std::invalid_argument("generator " + to_string(g) + " has the wrong dimension");
        }
        if (!ring->contains(g)) {
            throw std::invalid_argument("generator " + to_string(g) + " is not in the semigroup");
        }
    }
    std::sort(raw_gens.begin(), raw_gens.end());
    raw_gens.erase(std::unique(raw_gens.begin(), raw_gens.end()), raw_gens.end());
    std::stable_sort(raw_gens.begin(), raw_gens.end(),
                     [&](const auto &a, const auto &b) { return grading.weight(a) < grading.weight(b); });

    // A divisor never has larger weight than what it divides.
    std::vector<ExponentVector> kept;
    for (auto &g : raw_gens) {
        const bool redundant
            = std::any_of(kept.begin(), kept.end(), [&](const auto &k) { return divides_in(*ring, k, g); });
        if (!redundant) {
            kept.push_back(std::move(g));
        }
    }
    std::sort(kept.begin(), kept.end());
    return MonomialIdeal(ring, std::move(kept));
}

MonomialIdeal maximal_ideal(const RingPtr &ring)
{
    return minimalize(ring, ring->sgens());
}

bool membership(const MonomialIdeal &ideal, const ExponentVector &a)
{
    return ideal.contains(a);
}

bool equals(const MonomialIdeal &a, const MonomialIdeal &b)
{
    require_same_ring(a, b, "equals");
    return a == b;
}

MonomialIdeal sum(const MonomialIdeal &a, const MonomialIdeal &b)
{
    require_same_ring(a, b, "sum");
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return minimalize(a.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal &a, const MonomialIdeal &b)
{
    require_same_ring(a, b, "product");
    std::vector<ExponentVector> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto &g : a.generators()) {
        for (const auto &h : b.generators()) {
            gens.push_back(g + h);
        }
    }
    return minimalize(a.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal &a, int n)
{
    if (n < 0) {
        throw PreconditionError("negative ideal power");
    }
    auto result = MonomialIdeal::unit(a.ring());
    auto base = a;
    while (n > 0) {
        if (n & 1) {
            result = product(result, base);
        }
        n >>= 1;
        if (n > 0) {
            base = product(base, base);
        }
    }
    return result;
}

MonomialIdeal principal(const RingPtr &ring, const ExponentVector &e)
{
    return minimalize(ring, {e});
}

WindowedIdeal intersect_certified(const MonomialIdeal &a, const MonomialIdeal &b, const ComputeOptions &opts)
{
    require_same_ring(a, b, "intersect");
    if (a.is_zero() || b.is_zero()) {
        return {MonomialIdeal::zero(a.ring()), std::nullopt};
    }
    if (a.is_unit()) {
        return {b, std::nullopt};
    }
    if (b.is_unit()) {
        return {a, std::nullopt};
    }
    const auto &ring = a.ring();
    if (ring->is_polynomial()) {
        return {minimalize(ring, poly_intersection(a, b)), std::nullopt};
    }
    const Exponent bound = opts.window_bound.value_or(
        default_bound(*ring, a.max_generator_weight() + b.max_generator_weight()));
    return certified(ring, "intersect", bound, [&](Exponent w) { return windowed_intersection(a, b, w); });
}

MonomialIdeal intersect(const MonomialIdeal &a, const MonomialIdeal &b, const ComputeOptions &opts)
{
    return intersect_certified(a, b, opts).ideal;
}

WindowedIdeal colon_certified(const MonomialIdeal &i, const MonomialIdeal &j, const ComputeOptions &opts)
{
    require_same_ring(i, j, "colon");
    if (j.is_zero()) {
        throw PreconditionError("colon by the zero ideal is not defined");
    }
    if (j.is_unit() || i.is_zero() || i.is_unit()) {
        return {i, std::nullopt};
    }
    const auto &ring = i.ring();
    if (ring->is_polynomial()) {
        // (I : J) is the intersection over generators x^j of (I : x^j), and
        // (I : x^j) is generated by the truncated differences max(g - j, 0).
        std::optional<MonomialIdeal> acc;
        for (const auto &jg : j.generators()) {
            std::vector<ExponentVector> quotients;
            for (const auto &g : i.generators()) {
                std::vector<Exponent> q(g.size());
                for (std::size_t k = 0; k < g.size(); ++k) {
                    q[k] = std::max<Exponent>(g[k] - jg[k], 0);
                }
                quotients.emplace_back(std::move(q));
            }
            auto part = minimalize(ring, std::move(quotients));
            acc = acc ? minimalize(ring, poly_intersection(*acc, part)) : std::move(part);
        }
        return {std::move(*acc), std::nullopt};
    }
    const Exponent bound = opts.window_bound.value_or(default_bound(*ring, i.max_generator_weight()));
    return certified(ring, "colon", bound, [&](Exponent w) { return windowed_colon(i, j, w); });
}

MonomialIdeal colon(const MonomialIdeal &i, const MonomialIdeal &j, const ComputeOptions &opts)
{
    return colon_certified(i, j, opts).ideal;
}

MonomialIdeal colon_power(const MonomialIdeal &i, const MonomialIdeal &j, int t, const ComputeOptions &opts)
{
    if (t < 0) {
        throw PreconditionError("negative colon exponent");
    }
    auto cur = i;
    for (int step = 0; step < t; ++step) {
        auto next = colon(cur, j, opts);
        if (next == cur) {
            break;
        }
        cur = std::move(next);
    }
    return cur;
}

Saturation saturate_counted(const MonomialIdeal &i, const MonomialIdeal &j, const ComputeOptions &opts)
{
    require_same_ring(i, j, "saturate");
    if (j.is_zero()) {
        throw PreconditionError("saturation by the zero ideal is not defined");
    }
    auto cur = i;
    for (int k = 0; k < opts.saturation_cap; ++k) {
        auto next = colon(cur, j, opts);
        if (next == cur) {
            return {std::move(cur), k};
        }
        cur = std::move(next);
    }
    throw IterationCapExceeded(opts.saturation_cap);
}

MonomialIdeal saturate(const MonomialIdeal &i, const MonomialIdeal &j, const ComputeOptions &opts)
{
    return saturate_counted(i, j, opts).ideal;
}

MonomialIdeal saturate(const MonomialIdeal &i, const ComputeOptions &opts)
{
    return saturate(i, maximal_ideal(i.ring()), opts);
}

bool is_m_primary(const MonomialIdeal &k, const ComputeOptions &opts)
{
    if (k.is_zero() || k.is_unit()) {
        return false;
    }
    return saturate(k, opts).is_unit();
}

std::string monomial_to_string(const AffineSemigroupRing &ring, const ExponentVector &a)
{
    std::string out;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += ring.var_names()[k];
        if (a[k] != 1) {
            out += "^" + std::to_string(a[k]);
        }
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const MonomialIdeal &ideal)
{
    std::string out = "ideal(";
    for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += monomial_to_string(*ideal.ring(), ideal.generators()[i]);
    }
    return out + ")";
}

} // namespace epsmult
