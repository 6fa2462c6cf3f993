#include "window.hpp"

#include <cassert>
#include <stdexcept>

namespace epsmult::detail
{

Box::Box(std::vector<Exponent> extent) : m_extent(std::move(extent)), m_stride(m_extent.size(), 1)
{
    m_size = 1;
    for (std::size_t k = m_extent.size(); k-- > 0;) {
        if (m_extent[k] < 0) {
            m_size = 0;
            return;
        }
        m_stride[k] = m_size;
        m_size *= static_cast<std::size_t>(m_extent[k] + 1);
    }
    if (m_size > (std::size_t{1} << 31)) {
        throw std::length_error("window too large: " + std::to_string(m_size) + " points");
    }
}

bool Box::covers(const ExponentVector &a) const noexcept
{
    if (a.size() != dim()) {
        return false;
    }
    for (std::size_t k = 0; k < dim(); ++k) {
        if (a[k] < 0 || a[k] > m_extent[k]) {
            return false;
        }
    }
    return m_size > 0;
}

std::size_t Box::index(const ExponentVector &a) const noexcept
{
    std::size_t idx = 0;
    for (std::size_t k = 0; k < dim(); ++k) {
        idx += static_cast<std::size_t>(a[k]) * m_stride[k];
    }
    return idx;
}

std::ptrdiff_t Box::offset(const ExponentVector &shift) const noexcept
{
    std::ptrdiff_t off = 0;
    for (std::size_t k = 0; k < dim(); ++k) {
        off += static_cast<std::ptrdiff_t>(shift[k]) * static_cast<std::ptrdiff_t>(m_stride[k]);
    }
    return off;
}

namespace
{

bool dominates(const std::vector<Exponent> &p, const ExponentVector &s)
{
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] < s[k]) {
            return false;
        }
    }
    return true;
}

} // namespace

Bitmap ideal_table(const Box &box, const std::vector<ExponentVector> &gens, const std::vector<ExponentVector> &sgens)
{
    Bitmap table(box.size(), 0);
    for (const auto &g : gens) {
        if (box.covers(g)) {
            table[box.index(g)] = 1;
        }
    }
    std::vector<std::ptrdiff_t> offsets;
    offsets.reserve(sgens.size());
    for (const auto &s : sgens) {
        offsets.push_back(box.offset(s));
    }
    box.for_each_point([&](std::size_t idx, const std::vector<Exponent> &p) {
        if (table[idx]) {
            return;
        }
        for (std::size_t i = 0; i < sgens.size(); ++i) {
            if (dominates(p, sgens[i]) && table[idx - static_cast<std::size_t>(offsets[i])]) {
                table[idx] = 1;
                return;
            }
        }
    });
    return table;
}

std::vector<ExponentVector> table_minimal_elements(const Box &box, const Bitmap &table,
                                                   const std::vector<ExponentVector> &sgens,
                                                   const std::vector<Exponent> &weights, Exponent bound)
{
    assert(table.size() == box.size());
    std::vector<std::ptrdiff_t> offsets;
    for (const auto &s : sgens) {
        offsets.push_back(box.offset(s));
    }
    std::vector<ExponentVector> out;
    box.for_each_point([&](std::size_t idx, const std::vector<Exponent> &p) {
        if (!table[idx]) {
            return;
        }
        Exponent w = 0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            w += weights[k] * p[k];
        }
        if (w > bound) {
            return;
        }
        for (std::size_t i = 0; i < sgens.size(); ++i) {
            if (dominates(p, sgens[i]) && table[idx - static_cast<std::size_t>(offsets[i])]) {
                return;
            }
        }
        out.emplace_back(p);
    });
    return out;
}

Box weight_window(const std::vector<Exponent> &weights, Exponent bound, const std::vector<Exponent> &padding)
{
    std::vector<Exponent> extent(weights.size());
    for (std::size_t k = 0; k < weights.size(); ++k) {
        extent[k] = (bound < 0 ? -1 : bound / weights[k]) + (padding.empty() ? 0 : padding[k]);
    }
    return Box(std::move(extent));
}

} // namespace epsmult::detail
