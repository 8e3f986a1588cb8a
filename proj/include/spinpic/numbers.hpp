#ifndef SPINPIC_NUMBERS_HPP
#define SPINPIC_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>

namespace spinpic {

// All arithmetic in this library is exact: arbitrary-precision integers
// and rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Caller violated a documented precondition (CLI exit code 2).
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A mathematical postcondition failed inside the library (CLI exit code 4).
// Throwing this means the implementation is wrong, not the input.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

// A certificate's nonvanishing witness failed (CLI exit code 3).
struct certification_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline Int pow_int(const Int& base, unsigned long exp)
{
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

inline bool divides(const Int& d, const Int& n)
{
    if (d == 0) return n == 0;
    return n % d == 0;
}

inline Int exact_div(const Int& num, const Int& den)
{
    if (den == 0 || num % den != 0)
        throw invariant_violation("exact_div: " + num.str() + " is not divisible by " + den.str());
    return num / den;
}

inline bool is_integer(const Rat& q) { return boost::multiprecision::denominator(q) == 1; }

inline Int to_integer(const Rat& q)
{
    if (!is_integer(q))
        throw invariant_violation("expected integral value, got " + q.str());
    return boost::multiprecision::numerator(q);
}

// Least non-negative residue, correct for negative a.
inline Int mod_residue(const Int& a, const Int& m)
{
    Int x = a % m;
    if (x < 0) x += m;
    return x;
}

inline long long mod_residue(long long a, long long m)
{
    long long x = a % m;
    if (x < 0) x += m;
    return x;
}

} // namespace spinpic

#endif
