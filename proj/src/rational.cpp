#include <epsmult/rational.hpp>

#include <stdexcept>

namespace epsmult
{

std::int64_t ceil_to_int(const Rational &q)
{
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    BigInt quot = num / den;
    // cpp_int division truncates toward zero.
    if (num % den != 0 && num > 0) {
        ++quot;
    }
    return quot.convert_to<std::int64_t>();
}

std::string to_string(const Rational &q)
{
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string &text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        const BigInt den(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + text + "'");
        }
        return Rational(BigInt(text.substr(0, slash)), den);
    } catch (const std::runtime_error &) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

double to_double(const Rational &q)
{
    return q.convert_to<double>();
}

} // namespace epsmult
