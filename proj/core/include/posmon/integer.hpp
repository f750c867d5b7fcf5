#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace posmon {

// Arbitrary-precision signed integer. All decision paths in the library run
// on these; no floating point is used anywhere.
using Int = boost::multiprecision::cpp_int;

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int int_lcm(const Int& a, const Int& b) {
    return boost::multiprecision::lcm(a, b);
}

// Floor of sqrt for nonnegative input.
Int int_isqrt(const Int& a);

bool is_perfect_square(const Int& a);

// All positive divisors of |a|, ascending. Intended for small inputs
// (rational-root tests, bounded factor searches).
std::vector<Int> positive_divisors(const Int& a);

inline std::string int_to_string(const Int& a) { return a.str(); }

// Parses an optionally signed decimal integer. Throws Error{ParseError}.
Int int_from_string(const std::string& text);

}  // namespace posmon
