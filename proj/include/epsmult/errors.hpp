#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace epsmult
{

// Base class of every computation error raised by the library. The CLI maps
// these to exit status 3 and serializes kind() and the message.
class Error : public std::runtime_error
{
public:
    Error(std::string kind, const std::string &what) : std::runtime_error(what), m_kind(std::move(kind)) {}

    const std::string &kind() const noexcept
    {
        return m_kind;
    }

private:
    std::string m_kind;
};

class RingMismatch : public Error
{
public:
    explicit RingMismatch(const std::string &op) : Error("RingMismatch", op + ": operands live in different rings") {}
};

class PreconditionError : public Error
{
public:
    explicit PreconditionError(const std::string &what) : Error("PreconditionError", what) {}
};

// A windowed semigroup-ring computation changed when its window was doubled.
class StabilityFailure : public Error
{
public:
    StabilityFailure(std::string operation, std::int64_t bound, std::int64_t verified_at)
        : Error("StabilityFailure", operation + ": result changed between window bound " + std::to_string(bound)
                                        + " and " + std::to_string(verified_at)),
          m_operation(std::move(operation)), m_bound(bound), m_verified_at(verified_at)
    {
    }

    const std::string &operation() const noexcept
    {
        return m_operation;
    }
    std::int64_t bound() const noexcept
    {
        return m_bound;
    }
    std::int64_t verified_at() const noexcept
    {
        return m_verified_at;
    }

private:
    std::string m_operation;
    std::int64_t m_bound;
    std::int64_t m_verified_at;
};

class IterationCapExceeded : public Error
{
public:
    explicit IterationCapExceeded(int cap)
        : Error("IterationCapExceeded", "saturation did not reach a fixpoint within " + std::to_string(cap)
                                            + " iterations"),
          m_cap(cap)
    {
    }

    int cap() const noexcept
    {
        return m_cap;
    }

private:
    int m_cap;
};

class KNotPrimary : public Error
{
public:
    KNotPrimary() : Error("KNotPrimary", "the ideal K is not primary to the maximal ideal") {}
};

class PairNotCofinal : public Error
{
public:
    explicit PairNotCofinal(int m)
        : Error("PairNotCofinal", "A^m/B^m does not have finite length at m = " + std::to_string(m))
    {
    }
};

} // namespace epsmult
