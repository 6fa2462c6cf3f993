#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace epsmult
{

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    return Rational(BigInt(num), BigInt(den));
}

// Smallest integer >= q.
std::int64_t ceil_to_int(const Rational &q);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational &q);

// Parses "p" or "p/q"; throws std::invalid_argument.
Rational parse_rational(const std::string &text);

double to_double(const Rational &q);

} // namespace epsmult
