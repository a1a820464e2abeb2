#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sncore {

/// Arbitrary-precision integer used for every exact count and character value.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with big-integer numerator and denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Raised on precondition violations (size mismatches, non-primes, out-of-range
/// parameters). The CLI maps it to exit code 2.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline bool is_prime(long long p)
{
    if (p < 2)
        return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

inline void require_prime(long long p)
{
    if (!is_prime(p))
        throw InvalidInput("modulus " + std::to_string(p) + " is not prime");
}

/// "a/b" in lowest terms, or just "a" when the denominator is 1.
inline std::string to_string(const Rational& r)
{
    return r.str();
}

inline std::string to_string(const BigInt& v)
{
    return v.str();
}

inline double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

} // namespace sncore
