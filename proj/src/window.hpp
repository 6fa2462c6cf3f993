#pragma once

// Dense tables over a coordinate box [0, extent_1] x ... x [0, extent_d].
// The windowed semigroup-ring algorithms and the membership cache share them.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <epsmult/exponent.hpp>

namespace epsmult::detail
{

class Box
{
public:
    Box() = default;
    explicit Box(std::vector<Exponent> extent);

    std::size_t dim() const noexcept
    {
        return m_extent.size();
    }
    std::size_t size() const noexcept
    {
        return m_size;
    }
    const std::vector<Exponent> &extent() const noexcept
    {
        return m_extent;
    }

    bool covers(const ExponentVector &a) const noexcept;
    // Precondition: covers(a).
    std::size_t index(const ExponentVector &a) const noexcept;
    std::ptrdiff_t offset(const ExponentVector &shift) const noexcept;

    // Calls f(flat_index, coords) for every point in increasing flat order, which
    // is lexicographic order. coords is a reused buffer.
    template <typename F>
    void for_each_point(F &&f) const
    {
        if (m_size == 0) {
            return;
        }
        std::vector<Exponent> coords(dim(), 0);
        for (std::size_t idx = 0; idx < m_size; ++idx) {
            f(idx, static_cast<const std::vector<Exponent> &>(coords));
            for (std::size_t k = dim(); k-- > 0;) {
                if (coords[k] < m_extent[k]) {
                    ++coords[k];
                    break;
                }
                coords[k] = 0;
            }
        }
    }

private:
    std::vector<Exponent> m_extent;
    std::vector<std::size_t> m_stride;
    std::size_t m_size = 0;
};

using Bitmap = std::vector<std::uint8_t>;

// Membership table of the ideal generated by gens in k[S] over the box:
// p is in the ideal iff p is a generator or p - s is in the ideal for some
// semigroup generator s <= p. Passing gens = {0} tabulates S itself.
Bitmap ideal_table(const Box &box, const std::vector<ExponentVector> &gens, const std::vector<ExponentVector> &sgens);

// Minimal elements of a table that is closed under adding sgens, restricted to
// points with weight <= bound: p is kept iff no p - s (s a semigroup generator)
// is in the table. Output is lexicographic.
std::vector<ExponentVector> table_minimal_elements(const Box &box, const Bitmap &table,
                                                   const std::vector<ExponentVector> &sgens,
                                                   const std::vector<Exponent> &weights, Exponent bound);

// Box holding every point of weight <= bound, optionally padded per coordinate.
Box weight_window(const std::vector<Exponent> &weights, Exponent bound,
                  const std::vector<Exponent> &padding = {});

} // namespace epsmult::detail
