#include <epsmult/ring.hpp>

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <stdexcept>

#include <epsmult/rational.hpp>

#include "window.hpp"

namespace epsmult
{

// --- ExponentVector -------------------------------------------------------

ExponentVector::ExponentVector(std::initializer_list<Exponent> coords) : ExponentVector(std::vector<Exponent>(coords))
{
}

ExponentVector::ExponentVector(std::vector<Exponent> coords) : m_coords(std::move(coords))
{
    for (auto c : m_coords) {
        if (c < 0) {
            throw std::invalid_argument("negative exponent in " + to_string(*this));
        }
    }
}

bool ExponentVector::is_zero() const noexcept
{
    return std::all_of(m_coords.begin(), m_coords.end(), [](Exponent c) { return c == 0; });
}

Exponent ExponentVector::total_degree() const noexcept
{
    return std::accumulate(m_coords.begin(), m_coords.end(), Exponent{0});
}

std::optional<ExponentVector> ExponentVector::minus(const ExponentVector &a) const
{
    if (a.size() != size()) {
        throw std::invalid_argument("dimension mismatch in exponent difference");
    }
    ExponentVector out(size());
    for (std::size_t k = 0; k < size(); ++k) {
        if (m_coords[k] < a.m_coords[k]) {
            return std::nullopt;
        }
        out.m_coords[k] = m_coords[k] - a.m_coords[k];
    }
    return out;
}

ExponentVector ExponentVector::scaled(Exponent k) const
{
    ExponentVector out(*this);
    for (auto &c : out.m_coords) {
        c *= k;
    }
    return out;
}

ExponentVector operator+(const ExponentVector &a, const ExponentVector &b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("dimension mismatch in exponent sum");
    }
    ExponentVector out(a);
    for (std::size_t k = 0; k < a.size(); ++k) {
        out.m_coords[k] += b.m_coords[k];
    }
    return out;
}

bool componentwise_le(const ExponentVector &a, const ExponentVector &b)
{
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) {
            return false;
        }
    }
    return true;
}

ExponentVector componentwise_max(const ExponentVector &a, const ExponentVector &b)
{
    std::vector<Exponent> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        out[k] = std::max(a[k], b[k]);
    }
    return ExponentVector(std::move(out));
}

std::string to_string(const ExponentVector &a)
{
    std::string out = "(";
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k) {
            out += ", ";
        }
        out += std::to_string(a[k]);
    }
    return out + ")";
}

std::size_t ExponentVectorHash::operator()(const ExponentVector &a) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto c : a) {
        h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// --- WeightGrading --------------------------------------------------------

WeightGrading::WeightGrading(std::vector<Exponent> weights) : m_weights(std::move(weights))
{
    if (m_weights.empty()) {
        throw std::invalid_argument("a grading needs at least one weight");
    }
    for (auto w : m_weights) {
        if (w <= 0) {
            throw std::invalid_argument("grading weights must be positive");
        }
    }
}

WeightGrading WeightGrading::unit(std::size_t dim)
{
    return WeightGrading(std::vector<Exponent>(dim, 1));
}

Exponent WeightGrading::weight(const ExponentVector &a) const
{
    if (a.size() != m_weights.size()) {
        throw std::invalid_argument("dimension mismatch in weight");
    }
    Exponent w = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        w += m_weights[k] * a[k];
    }
    return w;
}

// --- membership cache -----------------------------------------------------

namespace detail
{

class SemigroupCache
{
public:
    bool contains(const ExponentVector &a, const std::vector<ExponentVector> &sgens)
    {
        {
            std::shared_lock lock(m_mutex);
            if (m_box.covers(a)) {
                return m_table[m_box.index(a)] != 0;
            }
        }
        std::unique_lock lock(m_mutex);
        if (!m_box.covers(a)) {
            std::vector<Exponent> extent(a.size());
            for (std::size_t k = 0; k < a.size(); ++k) {
                const Exponent cur = m_box.dim() == a.size() ? m_box.extent()[k] : Exponent{0};
                extent[k] = a[k] <= cur ? cur : std::max({a[k], 2 * cur, Exponent{15}});
            }
            Box box(std::move(extent));
            m_table = ideal_table(box, {ExponentVector(a.size())}, sgens);
            m_box = std::move(box);
        }
        return m_table[m_box.index(a)] != 0;
    }

private:
    std::shared_mutex m_mutex;
    Box m_box;
    Bitmap m_table;
};

} // namespace detail

// --- AffineSemigroupRing --------------------------------------------------

namespace
{

bool valid_identifier(const std::string &s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

} // namespace

AffineSemigroupRing::AffineSemigroupRing(std::vector<std::string> var_names, std::vector<ExponentVector> sgens,
                                         WeightGrading grading, bool polynomial)
    : m_ambient_dim(var_names.size()), m_sgens(std::move(sgens)), m_var_names(std::move(var_names)),
      m_grading(std::move(grading)), m_polynomial(polynomial), m_cache(std::make_shared<detail::SemigroupCache>())
{
    if (m_ambient_dim == 0) {
        throw std::invalid_argument("a ring needs at least one variable");
    }
    if (std::set<std::string>(m_var_names.begin(), m_var_names.end()).size() != m_var_names.size()) {
        throw std::invalid_argument("duplicate variable names");
    }
    for (const auto &name : m_var_names) {
        if (!valid_identifier(name)) {
            throw std::invalid_argument("invalid variable name '" + name + "'");
        }
    }
    if (m_sgens.empty()) {
        throw std::invalid_argument("a semigroup needs at least one generator");
    }
    if (m_grading.weights().size() != m_ambient_dim) {
        throw std::invalid_argument("grading dimension does not match the ring");
    }
    std::vector<std::vector<Exponent>> rows;
    for (const auto &g : m_sgens) {
        if (g.size() != m_ambient_dim) {
            throw std::invalid_argument("semigroup generator " + to_string(g) + " has the wrong dimension");
        }
        if (g.is_zero()) {
            throw std::invalid_argument("semigroup generators must be nonzero");
        }
        rows.emplace_back(g.begin(), g.end());
    }
    if (std::set<ExponentVector>(m_sgens.begin(), m_sgens.end()).size() != m_sgens.size()) {
        throw std::invalid_argument("duplicate semigroup generators");
    }
    m_krull_dim = integer_rank(rows);
    m_max_sgen_weight = 0;
    for (const auto &g : m_sgens) {
        m_max_sgen_weight = std::max(m_max_sgen_weight, m_grading.weight(g));
    }
}

RingPtr AffineSemigroupRing::polynomial(std::vector<std::string> var_names)
{
    const std::size_t d = var_names.size();
    std::vector<ExponentVector> basis;
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<Exponent> c(d, 0);
        c[k] = 1;
        basis.emplace_back(std::move(c));
    }
    auto grading = WeightGrading::unit(std::max<std::size_t>(d, 1));
    return std::make_shared<const AffineSemigroupRing>(std::move(var_names), std::move(basis), std::move(grading),
                                                       true);
}

RingPtr AffineSemigroupRing::semigroup(std::vector<std::string> var_names, std::vector<ExponentVector> sgens)
{
    auto grading = WeightGrading::unit(std::max<std::size_t>(var_names.size(), 1));
    return semigroup(std::move(var_names), std::move(sgens), std::move(grading));
}

RingPtr AffineSemigroupRing::semigroup(std::vector<std::string> var_names, std::vector<ExponentVector> sgens,
                                       WeightGrading grading)
{
    // A generator list that is exactly the standard basis is the polynomial ring.
    const std::size_t d = var_names.size();
    bool standard = sgens.size() == d;
    for (const auto &g : sgens) {
        standard = standard && g.size() == d && g.total_degree() == 1;
    }
    standard = standard && std::set<ExponentVector>(sgens.begin(), sgens.end()).size() == d;
    return std::make_shared<const AffineSemigroupRing>(std::move(var_names), std::move(sgens), std::move(grading),
                                                       standard);
}

bool AffineSemigroupRing::contains(const ExponentVector &a) const
{
    if (a.size() != m_ambient_dim) {
        throw std::invalid_argument("exponent " + to_string(a) + " does not match the ring dimension");
    }
    if (m_polynomial) {
        return true;
    }
    return m_cache->contains(a, m_sgens);
}

bool AffineSemigroupRing::same_as(const AffineSemigroupRing &other) const noexcept
{
    return this == &other || (m_ambient_dim == other.m_ambient_dim && m_sgens == other.m_sgens);
}

// --- free functions -------------------------------------------------------

MembershipCertificate semigroup_membership(const AffineSemigroupRing &ring, const ExponentVector &a)
{
    if (a.size() != ring.ambient_dim()) {
        throw std::invalid_argument("exponent " + to_string(a) + " does not match the ring dimension");
    }
    const auto &sgens = ring.sgens();
    MembershipCertificate cert;
    cert.multiplicities.assign(sgens.size(), 0);

    detail::Box box(std::vector<Exponent>(a.begin(), a.end()));
    // last[p] = 1 + index of a generator s with p - s in S; 0 for "not in S".
    std::vector<std::uint32_t> last(box.size(), 0);
    std::vector<std::ptrdiff_t> offsets;
    for (const auto &s : sgens) {
        offsets.push_back(box.offset(s));
    }
    constexpr std::uint32_t origin = 0xffffffffu;
    last[0] = origin;
    box.for_each_point([&](std::size_t idx, const std::vector<Exponent> &p) {
        if (idx == 0) {
            return;
        }
        for (std::size_t i = 0; i < sgens.size(); ++i) {
            bool fits = true;
            for (std::size_t k = 0; k < p.size() && fits; ++k) {
                fits = p[k] >= sgens[i][k];
            }
            if (fits && last[idx - static_cast<std::size_t>(offsets[i])] != 0) {
                last[idx] = static_cast<std::uint32_t>(i + 1);
                return;
            }
        }
    });

    std::size_t idx = box.size() - 1;
    if (last[idx] == 0) {
        return cert;
    }
    cert.member = true;
    while (idx != 0) {
        const std::size_t i = last[idx] - 1;
        ++cert.multiplicities[i];
        idx -= static_cast<std::size_t>(offsets[i]);
    }
    return cert;
}

bool s_divides(const AffineSemigroupRing &ring, const ExponentVector &a, const ExponentVector &b)
{
    const auto diff = b.minus(a);
    return diff && ring.contains(*diff);
}

std::vector<ExponentVector> enumerate_below(const AffineSemigroupRing &ring, const WeightGrading &grading,
                                            Exponent bound)
{
    if (bound < 0) {
        throw std::invalid_argument("enumeration bound must be nonnegative");
    }
    if (grading.weights().size() != ring.ambient_dim()) {
        throw std::invalid_argument("grading dimension does not match the ring");
    }
    const auto box = detail::weight_window(grading.weights(), bound);
    const auto table = detail::ideal_table(box, {ExponentVector(ring.ambient_dim())}, ring.sgens());
    std::vector<ExponentVector> out;
    box.for_each_point([&](std::size_t idx, const std::vector<Exponent> &p) {
        if (!table[idx]) {
            return;
        }
        ExponentVector a(p);
        if (grading.weight(a) <= bound) {
            out.push_back(std::move(a));
        }
    });
    return out;
}

std::size_t integer_rank(const std::vector<std::vector<Exponent>> &rows)
{
    if (rows.empty()) {
        return 0;
    }
    const std::size_t ncols = rows.front().size();
    std::vector<std::vector<Rational>> m;
    for (const auto &r : rows) {
        if (r.size() != ncols) {
            throw std::invalid_argument("ragged matrix in integer_rank");
        }
        m.emplace_back(r.begin(), r.end());
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) {
                continue;
            }
            const Rational f = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < ncols; ++c) {
                m[r][c] -= f * m[rank][c];
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace epsmult
