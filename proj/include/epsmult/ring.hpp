#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <epsmult/exponent.hpp>

namespace epsmult
{

namespace detail
{
class SemigroupCache;
}

// The monomial algebra k[S] for a finitely generated S in N^d.
//
// Localization at the monomial maximal ideal is not modeled. For monomial
// ideals, containment, colon, saturation and the length of finite-length
// quotients are the same in k[S] and in its localization, so all arithmetic
// stays in N^d.
class AffineSemigroupRing
{
public:
    // k[x_1, ..., x_d], generated by the standard basis.
    static std::shared_ptr<const AffineSemigroupRing> polynomial(std::vector<std::string> var_names);

    // var_names name the ambient coordinates; sgens generate S.
    static std::shared_ptr<const AffineSemigroupRing> semigroup(std::vector<std::string> var_names,
                                                                std::vector<ExponentVector> sgens);
    static std::shared_ptr<const AffineSemigroupRing>
    semigroup(std::vector<std::string> var_names, std::vector<ExponentVector> sgens, WeightGrading grading);

    std::size_t ambient_dim() const noexcept
    {
        return m_ambient_dim;
    }
    std::size_t krull_dim() const noexcept
    {
        return m_krull_dim;
    }
    const std::vector<ExponentVector> &sgens() const noexcept
    {
        return m_sgens;
    }
    const std::vector<std::string> &var_names() const noexcept
    {
        return m_var_names;
    }
    const WeightGrading &grading() const noexcept
    {
        return m_grading;
    }
    bool is_polynomial() const noexcept
    {
        return m_polynomial;
    }

    // Largest grading weight of a semigroup generator.
    Exponent max_sgen_weight() const noexcept
    {
        return m_max_sgen_weight;
    }

    // a in S. Backed by a shared, growing dynamic-programming table.
    bool contains(const ExponentVector &a) const;

    // Same ambient dimension and the same generator list.
    bool same_as(const AffineSemigroupRing &other) const noexcept;

    AffineSemigroupRing(std::vector<std::string> var_names, std::vector<ExponentVector> sgens, WeightGrading grading,
                        bool polynomial);

private:
    std::size_t m_ambient_dim;
    std::size_t m_krull_dim;
    std::vector<ExponentVector> m_sgens;
    std::vector<std::string> m_var_names;
    WeightGrading m_grading;
    bool m_polynomial;
    Exponent m_max_sgen_weight;
    std::shared_ptr<detail::SemigroupCache> m_cache;
};

using RingPtr = std::shared_ptr<const AffineSemigroupRing>;

// multiplicities[i] copies of sgens[i] sum to the queried vector when member.
struct MembershipCertificate {
    bool member = false;
    std::vector<Exponent> multiplicities;
};

// Decides a in S by dynamic programming over the box [0, a].
MembershipCertificate semigroup_membership(const AffineSemigroupRing &ring, const ExponentVector &a);

// x^a divides x^b in k[S], i.e. b - a is in S.
bool s_divides(const AffineSemigroupRing &ring, const ExponentVector &a, const ExponentVector &b);

// Elements of S of weight <= bound, in lexicographic order.
std::vector<ExponentVector> enumerate_below(const AffineSemigroupRing &ring, const WeightGrading &grading,
                                            Exponent bound);

// Rank over Q of the row vectors.
std::size_t integer_rank(const std::vector<std::vector<Exponent>> &rows);

} // namespace epsmult
