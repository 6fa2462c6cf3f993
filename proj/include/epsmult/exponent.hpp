#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace epsmult
{

using Exponent = std::int64_t;

// A point of N^d: the exponent of a monomial in the ambient polynomial ring.
// Ordering (operator<=>) is lexicographic and is the canonical output order.
class ExponentVector
{
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t dim) : m_coords(dim, 0) {}
    ExponentVector(std::initializer_list<Exponent> coords);
    explicit ExponentVector(std::vector<Exponent> coords);

    std::size_t size() const noexcept
    {
        return m_coords.size();
    }
    Exponent operator[](std::size_t i) const
    {
        return m_coords[i];
    }
    std::span<const Exponent> coords() const noexcept
    {
        return m_coords;
    }
    auto begin() const noexcept
    {
        return m_coords.begin();
    }
    auto end() const noexcept
    {
        return m_coords.end();
    }

    bool is_zero() const noexcept;
    Exponent total_degree() const noexcept;

    // b - a when it is coordinatewise nonnegative.
    std::optional<ExponentVector> minus(const ExponentVector &a) const;
    ExponentVector scaled(Exponent k) const;

    friend ExponentVector operator+(const ExponentVector &a, const ExponentVector &b);
    friend bool operator==(const ExponentVector &, const ExponentVector &) = default;
    friend auto operator<=>(const ExponentVector &, const ExponentVector &) = default;

private:
    std::vector<Exponent> m_coords;
};

// a <= b in every coordinate.
bool componentwise_le(const ExponentVector &a, const ExponentVector &b);
ExponentVector componentwise_max(const ExponentVector &a, const ExponentVector &b);

std::string to_string(const ExponentVector &a);

struct ExponentVectorHash {
    std::size_t operator()(const ExponentVector &a) const noexcept;
};

// Positive integer weights on the ambient coordinates.
class WeightGrading
{
public:
    explicit WeightGrading(std::vector<Exponent> weights);
    static WeightGrading unit(std::size_t dim);

    const std::vector<Exponent> &weights() const noexcept
    {
        return m_weights;
    }
    Exponent weight(const ExponentVector &a) const;

private:
    std::vector<Exponent> m_weights;
};

} // namespace epsmult
